#pragma once
// Finitely supported coefficient functions key -> field element.
//
// Combo<Tag> keeps its terms sorted by key with no zero coefficients, so
// structural equality is equality of the represented vectors. The tag only
// separates domains (algebra elements, tensors, Hopf elements) at the type level.

#include <algorithm>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cohext/field.hpp"

namespace cohext {

struct Term {
  std::uint64_t key;
  Fe c;
  friend bool operator==(const Term& a, const Term& b) { return a.key == b.key && a.c == b.c; }
};

namespace detail {
// Sorts by key, merges duplicates and drops zeros.
void normalize_terms(std::vector<Term>& terms);
std::vector<Term> add_terms(std::span<const Term> a, std::span<const Term> b, Fe scale_b);
}  // namespace detail

template <class Tag>
class Combo {
 public:
  Combo() = default;

  static Combo from_terms(std::vector<Term> terms) {
    detail::normalize_terms(terms);
    Combo r;
    r.terms_ = std::move(terms);
    return r;
  }
  /// Terms must already be sorted, unique and nonzero.
  static Combo from_sorted(std::vector<Term> terms) {
    Combo r;
    r.terms_ = std::move(terms);
    return r;
  }
  static Combo single(std::uint64_t key, Fe c) {
    Combo r;
    if (!c.is_zero()) r.terms_.push_back({key, c});
    return r;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient at key; `zero` is returned when absent.
  Fe coeff(std::uint64_t key, Fe zero) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, std::uint64_t k) { return t.key < k; });
    return (it != terms_.end() && it->key == key) ? it->c : zero;
  }

  Combo& operator+=(const Combo& o) {
    if (o.terms_.empty()) return *this;
    terms_ = detail::add_terms(terms_, o.terms_, one_of(o));
    return *this;
  }
  Combo& operator-=(const Combo& o) {
    if (o.terms_.empty()) return *this;
    terms_ = detail::add_terms(terms_, o.terms_, -one_of(o));
    return *this;
  }
  Combo operator+(const Combo& o) const { Combo r = *this; r += o; return r; }
  Combo operator-(const Combo& o) const { Combo r = *this; r -= o; return r; }
  Combo operator-() const {
    Combo r = *this;
    for (Term& t : r.terms_) t.c = -t.c;
    return r;
  }
  Combo operator*(Fe s) const {
    if (s.is_zero()) return {};
    Combo r = *this;
    for (Term& t : r.terms_) t.c = t.c * s;
    return r;
  }
  /// this += s * o
  void add_scaled(const Combo& o, Fe s) {
    if (o.terms_.empty() || s.is_zero()) return;
    terms_ = detail::add_terms(terms_, o.terms_, s);
  }

  friend bool operator==(const Combo& a, const Combo& b) { return a.terms_ == b.terms_; }

 private:
  // A unit of the field the terms live in.
  static Fe one_of(const Combo& o) {
    Fe c = o.terms_.front().c;
    return c / c;
  }

  std::vector<Term> terms_;
};

/// Collects terms with repeated keys; dense storage when the key space is small.
class Accumulator {
 public:
  Accumulator(const Field& f, std::uint64_t key_space);
  Accumulator(const Field& f, std::uint64_t key_space, std::uint64_t dense_limit);

  void add(std::uint64_t key, Fe c);
  std::vector<Term> take();
  // Same as take() without ordering the keys.
  std::vector<Term> take_unordered();
  // True when every accumulated coefficient vanished. Resets like take().
  bool take_is_zero();

  template <class Tag>
  Combo<Tag> take_combo() {
    return Combo<Tag>::from_sorted(take());
  }

 private:
  Field field_;
  bool dense_;
  std::vector<std::uint16_t> values_;
  std::vector<std::uint64_t> touched_;
  std::unordered_map<std::uint64_t, Fe> sparse_;
};

}  // namespace cohext
