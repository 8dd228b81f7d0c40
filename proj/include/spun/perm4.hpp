#pragma once
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace spun {

// Permutation of the vertex labels {0,1,2,3} of a tetrahedron.
class Perm4 {
public:
    constexpr Perm4() : img_{0, 1, 2, 3} {}
    constexpr explicit Perm4(std::array<std::uint8_t, 4> img) : img_(img) {}

    static std::optional<Perm4> parse(std::string_view s) {
        if (s.size() != 4) return std::nullopt;
        std::array<std::uint8_t, 4> img{};
        std::array<bool, 4> seen{};
        for (int i = 0; i < 4; ++i) {
            char c = s[static_cast<std::size_t>(i)];
            if (c < '0' || c > '3') return std::nullopt;
            int v = c - '0';
            if (seen[static_cast<std::size_t>(v)]) return std::nullopt;
            seen[static_cast<std::size_t>(v)] = true;
            img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
        }
        return Perm4(img);
    }

    int operator()(int v) const { return img_[static_cast<std::size_t>(v)]; }

    Perm4 inverse() const {
        std::array<std::uint8_t, 4> inv{};
        for (int i = 0; i < 4; ++i) inv[img_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
        return Perm4(inv);
    }

    // (p * q)(v) = p(q(v))
    Perm4 operator*(const Perm4& q) const {
        std::array<std::uint8_t, 4> r{};
        for (int i = 0; i < 4; ++i) r[static_cast<std::size_t>(i)] = img_[q.img_[static_cast<std::size_t>(i)]];
        return Perm4(r);
    }

    bool even() const {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (img_[static_cast<std::size_t>(i)] > img_[static_cast<std::size_t>(j)]) ++inversions;
        return inversions % 2 == 0;
    }

    int sign() const { return even() ? 1 : -1; }

    std::string str() const {
        std::string s(4, '0');
        for (int i = 0; i < 4; ++i) s[static_cast<std::size_t>(i)] = static_cast<char>('0' + img_[static_cast<std::size_t>(i)]);
        return s;
    }

    bool operator==(const Perm4& o) const { return img_ == o.img_; }
    bool operator!=(const Perm4& o) const { return !(*this == o); }
    bool operator<(const Perm4& o) const { return img_ < o.img_; }

    static const std::array<Perm4, 24>& all();

private:
    std::array<std::uint8_t, 4> img_;
};

// Sign of the 4-permutation sending (0,1,2,3) to (a,b,c,d).
int permutation_sign(int a, int b, int c, int d);

} // namespace spun
