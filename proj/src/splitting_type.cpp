#include "splitloci/splitting_type.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace splitloci {

SplittingType::SplittingType(std::vector<Int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("rank must be positive");
    std::sort(parts_.begin(), parts_.end());
}

Int SplittingType::degree() const {
    Int d = 0;
    for (Int e : parts_) d = checked_add(d, e);
    return d;
}

std::string SplittingType::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ", ";
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

SplittingType make_type(std::vector<Int> parts) { return SplittingType(std::move(parts)); }

SplittingType balanced(Int rank, Int degree) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    // floor division: degree = rank*q + r with 0 <= r < rank
    Int q = degree / rank;
    Int r = degree % rank;
    if (r < 0) {
        q -= 1;
        r += rank;
    }
    std::vector<Int> parts(static_cast<std::size_t>(rank), q);
    for (Int i = 0; i < r; ++i) parts[static_cast<std::size_t>(rank - 1 - i)] = q + 1;
    return SplittingType(std::move(parts));
}

Int expected_codim(const SplittingType& e) {
    const auto& p = e.parts();
    Int u = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            u = checked_add(u, std::max<Int>(0, p[j] - p[i] - 1));
    return u;
}

bool dominance_leq(const SplittingType& a, const SplittingType& b) {
    if (a.rank() != b.rank() || a.degree() != b.degree())
        throw std::invalid_argument("incomparable universes");
    Int pa = 0, pb = 0;
    for (std::size_t j = 0; j < a.parts().size(); ++j) {
        pa = checked_add(pa, a.parts()[j]);
        pb = checked_add(pb, b.parts()[j]);
        if (pa > pb) return false;
    }
    return true;
}

Int h0_twist(const SplittingType& e, Int m) {
    Int h = 0;
    for (Int ei : e.parts()) h = checked_add(h, std::max<Int>(0, checked_add(ei, m) + 1));
    return h;
}

Int h0_end(const SplittingType& e) {
    const auto& p = e.parts();
    Int h = 0;
    for (Int ei : p)
        for (Int ej : p) h = checked_add(h, std::max<Int>(0, ei - ej + 1));
    return h;
}

SplittingType serre_dual(const SplittingType& e) {
    std::vector<Int> parts;
    parts.reserve(e.parts().size());
    for (Int ei : e.parts()) parts.push_back(-ei - 2);
    return SplittingType(std::move(parts));
}

Int HilbertProfile::at(Int m) const {
    if (m < base_twist) return 0;
    Int idx = m - base_twist;
    if (idx >= static_cast<Int>(values.size()))
        throw std::out_of_range("twist above tabulated window");
    return values[static_cast<std::size_t>(idx)];
}

HilbertProfile hilbert_profile(const SplittingType& e) {
    HilbertProfile p;
    p.base_twist = -e.max_part() - 2;
    const Int top = -e.min_part();
    p.values.reserve(static_cast<std::size_t>(top - p.base_twist + 1));
    for (Int m = p.base_twist; m <= top; ++m) p.values.push_back(h0_twist(e, m));
    return p;
}

SplittingType type_from_hilbert(const HilbertProfile& p, Int rank) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    const auto bad = [] { throw std::invalid_argument("not a splitting-type Hilbert function"); };
    const Int n = static_cast<Int>(p.values.size());
    if (n < 3) bad();
    for (Int v : p.values)
        if (v < 0) bad();
    // Multiplicity of part -j is the second difference of h at j; both leading
    // values must vanish for the window to start at -(max part) - 2.
    if (p.values[0] != 0 || p.values[1] != 0) bad();
    std::vector<Int> parts;
    for (Int i = 2; i < n; ++i) {
        const Int mult =
            checked_add(checked_add(p.values[static_cast<std::size_t>(i)],
                                    checked_mul(-2, p.values[static_cast<std::size_t>(i - 1)])),
                        p.values[static_cast<std::size_t>(i - 2)]);
        if (mult < 0) bad();
        const Int part = -(p.base_twist + i);
        for (Int c = 0; c < mult; ++c) {
            if (static_cast<Int>(parts.size()) == rank) bad();
            parts.push_back(part);
        }
    }
    if (static_cast<Int>(parts.size()) != rank) bad();
    SplittingType e{std::move(parts)};
    // Reject padded or truncated windows: the profile must be the canonical one.
    const HilbertProfile rebuilt = hilbert_profile(e);
    if (rebuilt.base_twist != p.base_twist || rebuilt.values != p.values) bad();
    return e;
}

}  // namespace splitloci
