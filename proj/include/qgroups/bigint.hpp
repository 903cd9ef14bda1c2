#pragma once

#include <cstdint>
#include <string>
#include <vector>
#include <stdexcept>

namespace qg {

// Unsigned arbitrary-precision integer, base 2^32.  Only the operations the
// toolkit needs: multiply by machine words, add, compare, decimal I/O.
// Group orders here top out around 10^17 but callers should not have to care.
class BigUint {
public:
    BigUint() : d_{0} {}
    BigUint(std::uint64_t v) : d_{static_cast<std::uint32_t>(v & 0xffffffffu),
                                  static_cast<std::uint32_t>(v >> 32)} {
        trim();
    }

    static BigUint from_decimal(const std::string& s) {
        BigUint r(0);
        for (char c : s) {
            if (c == '\'' || c == '_' || c == ' ') continue; // digit grouping
            if (c < '0' || c > '9') throw std::invalid_argument("BigUint: bad digit in '" + s + "'");
            r.mul_small(10);
            r.add_small(static_cast<std::uint32_t>(c - '0'));
        }
        return r;
    }

    void mul_small(std::uint32_t m) {
        std::uint64_t carry = 0;
        for (auto& w : d_) {
            std::uint64_t t = static_cast<std::uint64_t>(w) * m + carry;
            w = static_cast<std::uint32_t>(t);
            carry = t >> 32;
        }
        if (carry) d_.push_back(static_cast<std::uint32_t>(carry));
        trim();
    }

    void add_small(std::uint32_t a) {
        std::uint64_t carry = a;
        for (auto& w : d_) {
            std::uint64_t t = static_cast<std::uint64_t>(w) + carry;
            w = static_cast<std::uint32_t>(t);
            carry = t >> 32;
            if (!carry) break;
        }
        if (carry) d_.push_back(static_cast<std::uint32_t>(carry));
    }

    BigUint operator*(const BigUint& o) const {
        std::vector<std::uint32_t> r(d_.size() + o.d_.size(), 0);
        for (std::size_t i = 0; i < d_.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < o.d_.size(); ++j) {
                std::uint64_t t = static_cast<std::uint64_t>(d_[i]) * o.d_[j] + r[i + j] + carry;
                r[i + j] = static_cast<std::uint32_t>(t);
                carry = t >> 32;
            }
            r[i + o.d_.size()] += static_cast<std::uint32_t>(carry);
        }
        BigUint out;
        out.d_ = std::move(r);
        out.trim();
        return out;
    }

    bool operator==(const BigUint& o) const { return d_ == o.d_; }
    bool operator!=(const BigUint& o) const { return d_ != o.d_; }
    bool operator<(const BigUint& o) const {
        if (d_.size() != o.d_.size()) return d_.size() < o.d_.size();
        for (std::size_t i = d_.size(); i-- > 0;)
            if (d_[i] != o.d_[i]) return d_[i] < o.d_[i];
        return false;
    }
    bool operator<=(const BigUint& o) const { return *this < o || *this == o; }

    bool fits_u64() const { return d_.size() <= 2; }
    std::uint64_t to_u64() const {
        if (!fits_u64()) throw std::overflow_error("BigUint: does not fit in 64 bits");
        std::uint64_t v = d_[0];
        if (d_.size() == 2) v |= static_cast<std::uint64_t>(d_[1]) << 32;
        return v;
    }

    std::string to_string() const {
        if (d_.size() == 1 && d_[0] == 0) return "0";
        std::vector<std::uint32_t> tmp = d_;
        std::string out;
        while (!(tmp.size() == 1 && tmp[0] == 0)) {
            // divide tmp by 10^9, collect remainder
            std::uint64_t rem = 0;
            for (std::size_t i = tmp.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | tmp[i];
                tmp[i] = static_cast<std::uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (tmp.size() > 1 && tmp.back() == 0) tmp.pop_back();
            std::string chunk = std::to_string(rem);
            bool last = (tmp.size() == 1 && tmp[0] == 0);
            if (!last) chunk = std::string(9 - chunk.size(), '0') + chunk;
            out = chunk + out;
        }
        return out;
    }

private:
    void trim() {
        while (d_.size() > 1 && d_.back() == 0) d_.pop_back();
    }
    std::vector<std::uint32_t> d_; // little-endian
};

} // namespace qg
