#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

namespace nalg {

// Set of element indices backed by 64-bit words. Orders stay small
// (<= 256), so everything is a handful of words.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(int capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

  static IndexSet full(int capacity) {
    IndexSet s(capacity);
    for (int i = 0; i < capacity; ++i) s.add(i);
    return s;
  }
  static IndexSet of(int capacity, std::initializer_list<int> idx) {
    IndexSet s(capacity);
    for (int i : idx) s.add(i);
    return s;
  }

  int capacity() const { return capacity_; }

  void add(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
  void remove(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  bool contains(const IndexSet& other) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (other.words_[i] & ~words_[i]) return false;
    return true;
  }
  bool intersects(const IndexSet& other) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (other.words_[i] & words_[i]) return true;
    return false;
  }

  IndexSet operator|(const IndexSet& o) const {
    IndexSet r = *this;
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
    return r;
  }
  IndexSet operator&(const IndexSet& o) const {
    IndexSet r = *this;
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  IndexSet operator-(const IndexSet& o) const {
    IndexSet r = *this;
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }

  bool operator==(const IndexSet& o) const { return words_ == o.words_; }
  bool operator!=(const IndexSet& o) const { return words_ != o.words_; }
  bool operator<(const IndexSet& o) const {  // arbitrary total order for sorting
    return words_ < o.words_;
  }

  // Members in increasing index order.
  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for (size_t wi = 0; wi < words_.size(); ++wi) {
      uint64_t w = words_[wi];
      while (w) {
        int b = __builtin_ctzll(w);
        v.push_back(static_cast<int>(wi * 64 + b));
        w &= w - 1;
      }
    }
    return v;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t wi = 0; wi < words_.size(); ++wi) {
      uint64_t w = words_[wi];
      while (w) {
        int b = __builtin_ctzll(w);
        f(static_cast<int>(wi * 64 + b));
        w &= w - 1;
      }
    }
  }

  size_t hash() const {
    size_t h = 0xcbf29ce484222325ull;
    for (uint64_t w : words_) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return h;
  }

 private:
  int capacity_ = 0;
  std::vector<uint64_t> words_;
};

struct IndexSetHash {
  size_t operator()(const IndexSet& s) const { return s.hash(); }
};

}  // namespace nalg
