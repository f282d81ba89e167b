#pragma once

#include <array>
#include <compare>
#include <cstdint>

namespace fpc {

namespace detail {

struct Perm4Tables {
    std::array<std::array<std::uint8_t, 4>, 24> images{};
    std::array<std::array<std::uint8_t, 24>, 24> compose{};
    std::array<std::uint8_t, 24> inverse{};
    std::array<std::int8_t, 24> sign{};
};

constexpr int perm4_rank(const std::array<std::uint8_t, 4>& im) {
    int code = 0;
    for (int i = 0; i < 4; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < 4; ++j)
            if (im[j] < im[i]) ++smaller;
        code = code * (4 - i) + smaller;
    }
    return code;
}

constexpr Perm4Tables build_perm4_tables() {
    Perm4Tables t;
    int code = 0;
    for (std::uint8_t a = 0; a < 4; ++a)
        for (std::uint8_t b = 0; b < 4; ++b)
            for (std::uint8_t c = 0; c < 4; ++c)
                for (std::uint8_t d = 0; d < 4; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    t.images[code++] = {a, b, c, d};
                }
    for (int p = 0; p < 24; ++p) {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (t.images[p][i] > t.images[p][j]) ++inversions;
        t.sign[p] = inversions % 2 == 0 ? 1 : -1;
        std::array<std::uint8_t, 4> inv{};
        for (std::uint8_t i = 0; i < 4; ++i) inv[t.images[p][i]] = i;
        t.inverse[p] = static_cast<std::uint8_t>(perm4_rank(inv));
        for (int q = 0; q < 24; ++q) {
            std::array<std::uint8_t, 4> pq{};
            for (int i = 0; i < 4; ++i) pq[i] = t.images[p][t.images[q][i]];
            t.compose[p][q] = static_cast<std::uint8_t>(perm4_rank(pq));
        }
    }
    return t;
}

inline constexpr Perm4Tables kPerm4Tables = build_perm4_tables();

}  // namespace detail

// A permutation of {0,1,2,3}, stored as the lexicographic rank (0-23) of its
// image sequence: code 0 is 0123, code 23 is 3210.
class Perm4 {
public:
    constexpr Perm4() = default;

    static constexpr Perm4 from_code(int code) { return Perm4(static_cast<std::uint8_t>(code)); }
    static constexpr Perm4 from_images(int a, int b, int c, int d);

    constexpr int operator[](int i) const { return detail::kPerm4Tables.images[code_][i]; }
    constexpr int code() const { return code_; }

    // (p * q)(i) == p[q[i]]
    constexpr Perm4 operator*(Perm4 q) const { return Perm4(detail::kPerm4Tables.compose[code_][q.code_]); }
    constexpr Perm4 inverse() const { return Perm4(detail::kPerm4Tables.inverse[code_]); }

    // +1 for even permutations, -1 for odd.
    constexpr int sign() const { return detail::kPerm4Tables.sign[code_]; }
    constexpr bool even() const { return sign() > 0; }

    constexpr auto operator<=>(const Perm4&) const = default;

private:
    constexpr explicit Perm4(std::uint8_t code) : code_(code) {}


    std::uint8_t code_ = 0;
};

constexpr Perm4 Perm4::from_images(int a, int b, int c, int d) {
    return Perm4(static_cast<std::uint8_t>(detail::perm4_rank({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                                                 static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)})));
}

}  // namespace fpc
