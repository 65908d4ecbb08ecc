#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace mindef {

using ArgIndex = std::size_t;

/// Identity of the framework an ArgumentSet indexes into.
struct FrameworkId {
    std::uint64_t value = 0;
    friend bool operator==(FrameworkId, FrameworkId) = default;
};

/// Fixed-width bit vector over the argument indices of one framework.
///
/// Binary operations between sets of different frameworks throw
/// CrossFrameworkSet. A default-constructed set is bound to no framework and
/// has universe size zero.
class ArgumentSet {
public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = ArgIndex;
        using difference_type = std::ptrdiff_t;
        using pointer = const ArgIndex*;
        using reference = ArgIndex;

        const_iterator() = default;
        ArgIndex operator*() const { return pos_; }
        const_iterator& operator++();
        const_iterator operator++(int) {
            auto copy = *this;
            ++*this;
            return copy;
        }
        friend bool operator==(const const_iterator& a, const const_iterator& b) {
            return a.pos_ == b.pos_;
        }

    private:
        friend class ArgumentSet;
        const_iterator(const ArgumentSet* set, ArgIndex pos) : set_(set), pos_(pos) {}

        const ArgumentSet* set_ = nullptr;
        ArgIndex pos_ = 0;
    };

    ArgumentSet() = default;
    ArgumentSet(FrameworkId framework, std::size_t universe);

    FrameworkId framework() const noexcept { return framework_; }
    std::size_t universe_size() const noexcept { return universe_; }

    bool contains(ArgIndex a) const noexcept {
        return a < universe_ && (words_[a / 64] >> (a % 64)) & 1U;
    }
    void insert(ArgIndex a);
    void erase(ArgIndex a);
    void clear() noexcept;

    std::size_t size() const noexcept;
    bool empty() const noexcept;

    bool is_subset_of(const ArgumentSet& other) const;
    bool is_strict_subset_of(const ArgumentSet& other) const;
    bool intersects(const ArgumentSet& other) const;

    ArgumentSet& operator|=(const ArgumentSet& other);
    ArgumentSet& operator&=(const ArgumentSet& other);
    ArgumentSet& operator-=(const ArgumentSet& other);

    friend ArgumentSet operator|(ArgumentSet a, const ArgumentSet& b) { return a |= b; }
    friend ArgumentSet operator&(ArgumentSet a, const ArgumentSet& b) { return a &= b; }
    friend ArgumentSet operator-(ArgumentSet a, const ArgumentSet& b) { return a -= b; }

    friend bool operator==(const ArgumentSet& a, const ArgumentSet& b) {
        return a.framework_ == b.framework_ && a.universe_ == b.universe_ && a.words_ == b.words_;
    }
    /// Total order on the raw bit pattern; used for deduplication only.
    friend std::strong_ordering operator<=>(const ArgumentSet& a, const ArgumentSet& b) {
        return a.words_ <=> b.words_;
    }

    const_iterator begin() const { return {this, first_from(0)}; }
    const_iterator end() const { return {this, universe_}; }

    std::vector<ArgIndex> members() const { return {begin(), end()}; }

private:
    void check_same(const ArgumentSet& other) const;
    ArgIndex first_from(ArgIndex from) const noexcept;

    FrameworkId framework_{};
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace mindef
