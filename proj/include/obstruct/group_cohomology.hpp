#ifndef OBSTRUCT_GROUP_COHOMOLOGY_HPP
#define OBSTRUCT_GROUP_COHOMOLOGY_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

/*
 * Cohomology of small finite groups with coefficients in F_2 (trivial
 * action), computed on the unnormalized inhomogeneous bar complex.
 *
 * An n-cochain is a table of F_2 values indexed by n-tuples of group
 * elements; the tuple (g_1, ..., g_n) sits at index sum g_i * |G|^(n-i),
 * so g_1 is the most significant digit.
 */
namespace obstruct::gcoh {

class SmallGroup
{
    std::string name_;
    int order_;
    int identity_;
    std::vector<int> table_;
    std::vector<int> inverse_;

    public:

    /* Validates closure, associativity, identity and inverses. */
    SmallGroup(std::string name, std::vector<std::vector<int>> const & table);

    static SmallGroup const & z2();
    /* Z/2 x Z/2 with (e, f) at index e + 2f. */
    static SmallGroup const & klein_four();
    static SmallGroup const & trivial();
    static SmallGroup cyclic(int n);
    static SmallGroup direct_product(SmallGroup const & a, SmallGroup const & b);

    std::string const & name() const { return name_; }
    int order() const { return order_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a * order_ + b]; }
    int inv(int a) const { return inverse_[a]; }
};

/* Degree-n cochain. The group must outlive the cochain. */
struct Cochain
{
    SmallGroup const * group = nullptr;
    unsigned degree = 0;
    std::vector<std::uint8_t> values;

    std::size_t size() const { return values.size(); }
    std::size_t index_of(std::span<int const> args) const;
    std::uint8_t operator()(std::span<int const> args) const { return values[index_of(args)]; }
    std::uint8_t operator()(std::initializer_list<int> args) const
    {
        return (*this)(std::span<int const>(args.begin(), args.size()));
    }
    void set(std::initializer_list<int> args, std::uint8_t v)
    {
        values[index_of(std::span<int const>(args.begin(), args.size()))] = v & 1;
    }
    /* Decodes a flat index into its tuple. */
    std::vector<int> tuple_at(std::size_t index) const;
    bool is_zero() const;

    Cochain operator+(Cochain const & o) const;
    bool operator==(Cochain const & o) const
    {
        return group == o.group && degree == o.degree && values == o.values;
    }
};

Cochain zero_cochain(SmallGroup const & G, unsigned degree);

/* The 1-cocycle given by a homomorphism G -> F_2 (values per element). */
Cochain homomorphism_cochain(SmallGroup const & G, std::vector<std::uint8_t> const & values);

Cochain coboundary(Cochain const & c);
bool is_cocycle(Cochain const & c);
bool is_coboundary(Cochain const & c);
bool cohomologous(Cochain const & a, Cochain const & b);

struct CohomologyBasis
{
    unsigned degree = 0;
    std::vector<Cochain> representatives;
    std::size_t dim() const { return representatives.size(); }
};

/* Representatives are the lexicographically least members of their cosets
 * modulo coboundaries. */
CohomologyBasis cohomology_basis(SmallGroup const & G, unsigned degree);

/* Throws std::invalid_argument if either input is not a cocycle. */
Cochain cup(Cochain const & a, Cochain const & b);

/*
 * Coordinates of a degree-3 class in the basis (a^3) for Z/2 and
 * (a^3, a^2 b, a b^2, b^3) for Z/2 x Z/2, where a and b are the two
 * coordinate projections.
 */
struct H3Class
{
    std::vector<std::uint8_t> coords;

    bool is_zero() const;
    std::string name() const;
    bool operator==(H3Class const & o) const { return coords == o.coords; }
};

/* The generators a (and b) of H^1 for the two supported groups. */
std::vector<Cochain> degree_one_generators(SmallGroup const & G);
/* The fixed cup-product basis of H^3 used by classify3. */
std::vector<Cochain> h3_cup_basis(SmallGroup const & G);
std::vector<std::string> h3_basis_names(SmallGroup const & G);

H3Class classify3(Cochain const & c);

/* Expresses a cocycle in an arbitrary list of classes modulo coboundaries.
 * Throws std::domain_error if the class is not in their span. */
std::vector<std::uint8_t> coordinates_in(Cochain const & c, std::vector<Cochain> const & basis);

/* h maps elements of H to elements of c.group. Throws on a non-homomorphism. */
Cochain pullback(Cochain const & c, SmallGroup const & H, std::vector<int> const & h);

bool is_homomorphism(SmallGroup const & H, SmallGroup const & G, std::vector<int> const & h);

} // namespace obstruct::gcoh

#endif
