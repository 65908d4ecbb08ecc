#include "mindef/argument_set.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "mindef/errors.hpp"

namespace mindef {

namespace {
constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }
}  // namespace

ArgumentSet::ArgumentSet(FrameworkId framework, std::size_t universe)
    : framework_(framework), universe_(universe), words_(words_for(universe), 0) {}

void ArgumentSet::insert(ArgIndex a) {
    if (a >= universe_) {
        throw std::out_of_range("argument index " + std::to_string(a) + " outside universe");
    }
    words_[a / 64] |= std::uint64_t{1} << (a % 64);
}

void ArgumentSet::erase(ArgIndex a) {
    if (a < universe_) {
        words_[a / 64] &= ~(std::uint64_t{1} << (a % 64));
    }
}

void ArgumentSet::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

std::size_t ArgumentSet::size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool ArgumentSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

void ArgumentSet::check_same(const ArgumentSet& other) const {
    if (framework_ != other.framework_ || universe_ != other.universe_) {
        throw CrossFrameworkSet();
    }
}

bool ArgumentSet::is_subset_of(const ArgumentSet& other) const {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
}

bool ArgumentSet::is_strict_subset_of(const ArgumentSet& other) const {
    return is_subset_of(other) && words_ != other.words_;
}

bool ArgumentSet::intersects(const ArgumentSet& other) const {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (words_[i] & other.words_[i]) return true;
    }
    return false;
}

ArgumentSet& ArgumentSet::operator|=(const ArgumentSet& other) {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

ArgumentSet& ArgumentSet::operator&=(const ArgumentSet& other) {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

ArgumentSet& ArgumentSet::operator-=(const ArgumentSet& other) {
    check_same(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

ArgIndex ArgumentSet::first_from(ArgIndex from) const noexcept {
    std::size_t w = from / 64;
    if (w >= words_.size()) return universe_;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from % 64));
    while (true) {
        if (bits != 0) {
            return std::min<ArgIndex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)), universe_);
        }
        if (++w == words_.size()) return universe_;
        bits = words_[w];
    }
}

ArgumentSet::const_iterator& ArgumentSet::const_iterator::operator++() {
    pos_ = set_->first_from(pos_ + 1);
    return *this;
}

}  // namespace mindef
