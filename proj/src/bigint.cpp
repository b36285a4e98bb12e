#include "tcb/bigint.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace tcb {

void Bigint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

Bigint Bigint::low_ones(unsigned n) {
    Bigint r;
    r.limbs_.assign(n / 64, ~uint64_t{0});
    if (n % 64) r.limbs_.push_back((uint64_t{1} << (n % 64)) - 1);
    r.trim();
    return r;
}

Bigint Bigint::pow2(unsigned n) {
    Bigint r;
    r.limbs_.assign(n / 64, 0);
    r.limbs_.push_back(uint64_t{1} << (n % 64));
    return r;
}

unsigned Bigint::bit_length() const {
    if (limbs_.empty()) return 0;
    return static_cast<unsigned>(limbs_.size() - 1) * 64 +
           (64 - std::countl_zero(limbs_.back()));
}

bool Bigint::bit(unsigned i) const {
    size_t limb = i / 64;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 64)) & 1u;
}

unsigned Bigint::trailing_zero_bits() const {
    assert(!limbs_.empty());
    unsigned i = 0;
    while (limbs_[i] == 0) ++i;
    return i * 64 + std::countr_zero(limbs_[i]);
}

Bigint Bigint::low_bits(unsigned t) const {
    Bigint r;
    size_t full = t / 64;
    for (size_t i = 0; i < limbs_.size() && i < full; ++i)
        r.limbs_.push_back(limbs_[i]);
    if (t % 64 && full < limbs_.size())
        r.limbs_.push_back(limbs_[full] & ((uint64_t{1} << (t % 64)) - 1));
    r.trim();
    return r;
}

Bigint& Bigint::operator+=(const Bigint& other) {
    if (other.limbs_.size() > limbs_.size())
        limbs_.resize(other.limbs_.size(), 0);
    unsigned __int128 carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        unsigned __int128 s = carry + limbs_[i];
        if (i < other.limbs_.size()) s += other.limbs_[i];
        limbs_[i] = static_cast<uint64_t>(s);
        carry = s >> 64;
    }
    if (carry) limbs_.push_back(static_cast<uint64_t>(carry));
    return *this;
}

Bigint& Bigint::mul_word(uint64_t w) {
    if (w == 0 || limbs_.empty()) {
        limbs_.clear();
        return *this;
    }
    unsigned __int128 carry = 0;
    for (auto& limb : limbs_) {
        unsigned __int128 p = static_cast<unsigned __int128>(limb) * w + carry;
        limb = static_cast<uint64_t>(p);
        carry = p >> 64;
    }
    if (carry) limbs_.push_back(static_cast<uint64_t>(carry));
    return *this;
}

uint64_t Bigint::div_word(uint64_t w) {
    assert(w != 0);
    unsigned __int128 rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        unsigned __int128 cur = (rem << 64) | limbs_[i];
        limbs_[i] = static_cast<uint64_t>(cur / w);
        rem = cur % w;
    }
    trim();
    return static_cast<uint64_t>(rem);
}

Bigint Bigint::operator*(const Bigint& other) const {
    Bigint r;
    if (limbs_.empty() || other.limbs_.empty()) return r;
    r.limbs_.assign(limbs_.size() + other.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        unsigned __int128 carry = 0;
        for (size_t j = 0; j < other.limbs_.size(); ++j) {
            unsigned __int128 cur =
                static_cast<unsigned __int128>(limbs_[i]) * other.limbs_[j] +
                r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<uint64_t>(cur);
            carry = cur >> 64;
        }
        r.limbs_[i + other.limbs_.size()] += static_cast<uint64_t>(carry);
    }
    r.trim();
    return r;
}

int Bigint::compare(const Bigint& other) const {
    if (limbs_.size() != other.limbs_.size())
        return limbs_.size() < other.limbs_.size() ? -1 : 1;
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != other.limbs_[i])
            return limbs_[i] < other.limbs_[i] ? -1 : 1;
    }
    return 0;
}

uint64_t Bigint::to_u64() const {
    if (limbs_.empty()) return 0;
    if (limbs_.size() > 1) throw std::overflow_error("Bigint::to_u64: value exceeds 64 bits");
    return limbs_[0];
}

std::string Bigint::to_string() const {
    if (limbs_.empty()) return "0";
    // Peel off 19 decimal digits at a time.
    constexpr uint64_t chunk = 10'000'000'000'000'000'000ull;
    std::vector<uint64_t> parts;
    Bigint tmp = *this;
    while (!tmp.is_zero()) parts.push_back(tmp.div_word(chunk));
    std::string out = std::to_string(parts.back());
    for (size_t i = parts.size() - 1; i-- > 0;) {
        std::string p = std::to_string(parts[i]);
        out += std::string(19 - p.size(), '0') + p;
    }
    return out;
}

}  // namespace tcb
