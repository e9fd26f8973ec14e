#ifndef OBSTRUCT_F2_ECHELON_HPP
#define OBSTRUCT_F2_ECHELON_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace obstruct::detail {

/*
 * Incremental row echelon form over F_2. Every stored row has a distinct
 * pivot (its lowest set bit); rows are kept sorted by pivot. Each row
 * carries a tag vector recording which inserted vectors it combines.
 */
class F2Echelon
{
    public:

    using Bits = std::vector<std::uint64_t>;

    struct Row
    {
        Bits bits;
        Bits tag;
        std::size_t pivot;
    };

    F2Echelon(std::size_t nbits, std::size_t ntags)
        : nwords_((nbits + 63) / 64), ntagwords_((ntags + 63) / 64 + 1)
    {
    }

    Bits make_bits() const { return Bits(nwords_, 0); }
    Bits make_tag() const { return Bits(ntagwords_, 0); }

    static bool test(Bits const & b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1; }
    static void flip(Bits & b, std::size_t i) { b[i / 64] ^= std::uint64_t(1) << (i % 64); }

    static bool is_zero(Bits const & b)
    {
        for (auto w : b)
            if (w)
                return false;
        return true;
    }

    /* Clears every pivot position of v, accumulating the used tags. */
    void reduce(Bits & v, Bits & tag) const
    {
        for (auto const & r : rows_) {
            if (!test(v, r.pivot))
                continue;
            for (std::size_t i = 0; i < nwords_; ++i)
                v[i] ^= r.bits[i];
            for (std::size_t i = 0; i < ntagwords_; ++i)
                tag[i] ^= r.tag[i];
        }
    }

    void reduce(Bits & v) const
    {
        Bits tag = make_tag();
        reduce(v, tag);
    }

    /* Returns true if v was independent of the current rows. */
    bool insert(Bits v, Bits tag)
    {
        reduce(v, tag);
        std::size_t pivot = 0;
        for (std::size_t w = 0; w < nwords_; ++w) {
            if (v[w]) {
                pivot = w * 64 + static_cast<std::size_t>(__builtin_ctzll(v[w]));
                Row row{ std::move(v), std::move(tag), pivot };
                auto it = rows_.begin();
                while (it != rows_.end() && it->pivot < pivot)
                    ++it;
                rows_.insert(it, std::move(row));
                return true;
            }
        }
        return false;
    }

    bool insert(Bits v) { return insert(std::move(v), make_tag()); }

    std::size_t rank() const { return rows_.size(); }
    std::vector<Row> const & rows() const { return rows_; }

    private:

    std::size_t nwords_;
    std::size_t ntagwords_;
    std::vector<Row> rows_;
};

} // namespace obstruct::detail

#endif
