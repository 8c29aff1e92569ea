#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>

namespace normalcx {

/// A permutation of the local vertex labels {0,1,2,3} of a tetrahedron.
class Perm4 {
public:
    constexpr Perm4() : image_{0, 1, 2, 3} {}
    constexpr Perm4(int a, int b, int c, int d)
        : image_{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                 static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)} {}

    /// True iff the four images are a rearrangement of 0..3.
    static constexpr bool is_bijection(std::span<const int, 4> image) {
        unsigned seen = 0;
        for (int x : image) {
            if (x < 0 || x > 3) return false;
            seen |= 1u << x;
        }
        return seen == 0xF;
    }

    constexpr int operator[](int i) const { return image_[i]; }

    constexpr Perm4 inverse() const {
        Perm4 out;
        for (int i = 0; i < 4; ++i) out.image_[image_[i]] = static_cast<std::uint8_t>(i);
        return out;
    }

    /// (this * other)[i] == this[other[i]]
    constexpr Perm4 operator*(const Perm4& other) const {
        Perm4 out;
        for (int i = 0; i < 4; ++i) out.image_[i] = image_[other.image_[i]];
        return out;
    }

    constexpr int sign() const {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (image_[i] > image_[j]) ++inversions;
        return inversions % 2 == 0 ? 1 : -1;
    }

    constexpr auto operator<=>(const Perm4&) const = default;

private:
    std::array<std::uint8_t, 4> image_;
};

/// Sign of the sequence (a,b,c,d) read as a permutation of 0..3.
constexpr int permutation_sign(int a, int b, int c, int d) {
    return Perm4(a, b, c, d).sign();
}

/// The three vertices of face `face` (the face omitting that vertex), ascending.
constexpr std::array<int, 3> face_corners(int face) {
    std::array<int, 3> out{};
    int k = 0;
    for (int v = 0; v < 4; ++v)
        if (v != face) out[k++] = v;
    return out;
}

/// Position of `corner` among face_corners(face), or -1 if it is the omitted vertex.
constexpr int corner_slot(int face, int corner) {
    if (corner == face) return -1;
    return corner < face ? corner : corner - 1;
}

}  // namespace normalcx
