#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qg {

// GF(4) = {0, 1, w, w^2} with w^2 = w + 1, encoded 0,1,2,3 in two bits.
// Addition is XOR; conjugation is the Frobenius map x -> x^2.
namespace gf4 {

inline constexpr std::uint8_t ZERO = 0, ONE = 1, W = 2, W2 = 3;

inline constexpr std::uint8_t MUL[4][4] = {
    {0, 0, 0, 0},
    {0, 1, 2, 3},
    {0, 2, 3, 1},
    {0, 3, 1, 2},
};
inline constexpr std::uint8_t CONJ[4] = {0, 1, 3, 2};
inline constexpr std::uint8_t INV[4] = {0, 1, 3, 2}; // w^-1 = w^2 (undefined at 0)

inline std::uint8_t add(std::uint8_t a, std::uint8_t b) { return a ^ b; }
inline std::uint8_t mul(std::uint8_t a, std::uint8_t b) { return MUL[a][b]; }
inline std::uint8_t conj(std::uint8_t a) { return CONJ[a]; }
inline std::uint8_t inv(std::uint8_t a) {
    if (!a) throw std::domain_error("gf4: inverse of 0");
    return INV[a];
}

inline char symbol(std::uint8_t a) { return "01wW"[a]; } // W = w^2

} // namespace gf4

// Length-6 GF(4) vector packed into 12 bits: coordinate i occupies bits
// 2i..2i+1.  Code 0 is the zero vector; nonzero codes 1..4095 index the
// points of the 4095-point action.
struct Vec6 {
    std::uint16_t code = 0;

    static Vec6 basis(int i) { return Vec6{static_cast<std::uint16_t>(1u << (2 * i))}; }

    std::uint8_t operator[](int i) const { return static_cast<std::uint8_t>((code >> (2 * i)) & 3u); }
    void set(int i, std::uint8_t v) {
        code = static_cast<std::uint16_t>((code & ~(3u << (2 * i))) | (static_cast<unsigned>(v) << (2 * i)));
    }

    bool is_zero() const { return code == 0; }
    Vec6 operator+(Vec6 o) const { return Vec6{static_cast<std::uint16_t>(code ^ o.code)}; }
    bool operator==(const Vec6&) const = default;

    Vec6 scaled(std::uint8_t s) const {
        Vec6 r;
        for (int i = 0; i < 6; ++i) r.set(i, gf4::mul(s, (*this)[i]));
        return r;
    }

    // scale so the first nonzero coordinate is 1 (projective representative)
    Vec6 projective_rep() const {
        for (int i = 0; i < 6; ++i) {
            std::uint8_t c = (*this)[i];
            if (c) return scaled(gf4::inv(c));
        }
        return *this;
    }

    std::string str() const {
        // e.g. "v1+w v3+v5+w v6"
        std::string out;
        for (int i = 0; i < 6; ++i) {
            std::uint8_t c = (*this)[i];
            if (!c) continue;
            if (!out.empty()) out += "+";
            if (c == gf4::W) out += "w*";
            if (c == gf4::W2) out += "W*";
            out += "v" + std::to_string(i + 1);
        }
        return out.empty() ? "0" : out;
    }
};

} // namespace qg
