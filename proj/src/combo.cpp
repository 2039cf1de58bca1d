#include "cohext/combo.hpp"

namespace cohext {

namespace detail {

void normalize_terms(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.key < b.key; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term acc = terms[i];
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].key == acc.key; ++j) acc.c += terms[j].c;
    if (!acc.c.is_zero()) terms[out++] = acc;
    i = j;
  }
  terms.resize(out);
}

std::vector<Term> add_terms(std::span<const Term> a, std::span<const Term> b, Fe scale_b) {
  std::vector<Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].key < b[j].key)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].key < a[i].key) {
      Fe c = b[j].c * scale_b;
      if (!c.is_zero()) r.push_back({b[j].key, c});
      ++j;
    } else {
      Fe c = a[i].c + b[j].c * scale_b;
      if (!c.is_zero()) r.push_back({a[i].key, c});
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace detail

namespace {
constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;
}

Accumulator::Accumulator(const Field& f, std::uint64_t key_space) : Accumulator(f, key_space, kDenseLimit) {}

Accumulator::Accumulator(const Field& f, std::uint64_t key_space, std::uint64_t dense_limit)
    : field_(f), dense_(key_space <= dense_limit) {
  if (dense_) values_.assign(key_space, 0);
}

void Accumulator::add(std::uint64_t key, Fe c) {
  if (c.is_zero()) return;
  if (dense_) {
    std::uint16_t& slot = values_[key];
    if (slot == 0) touched_.push_back(key);
    const detail::FieldData* fd = field_.data();
    slot = fd->add[slot * fd->q + c.code()];
    return;
  }
  auto [it, inserted] = sparse_.try_emplace(key, c);
  if (!inserted) it->second += c;
}

std::vector<Term> Accumulator::take() {
  std::vector<Term> out;
  if (dense_) {
    std::sort(touched_.begin(), touched_.end());
    touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
    out.reserve(touched_.size());
    for (std::uint64_t key : touched_) {
      if (values_[key] != 0) out.push_back({key, field_.from_code(values_[key])});
      values_[key] = 0;
    }
    touched_.clear();
    return out;
  }
  out.reserve(sparse_.size());
  for (const auto& [key, c] : sparse_)
    if (!c.is_zero()) out.push_back({key, c});
  sparse_.clear();
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.key < b.key; });
  return out;
}

std::vector<Term> Accumulator::take_unordered() {
  if (!dense_) return take();
  std::vector<Term> out;
  for (std::uint64_t key : touched_) {
    if (values_[key] != 0) out.push_back({key, field_.from_code(values_[key])});
    values_[key] = 0;
  }
  touched_.clear();
  return out;
}

bool Accumulator::take_is_zero() {
  bool zero = true;
  if (dense_) {
    for (std::uint64_t key : touched_) {
      if (values_[key] != 0) zero = false;
      values_[key] = 0;
    }
    touched_.clear();
    return zero;
  }
  for (const auto& [key, c] : sparse_)
    if (!c.is_zero()) zero = false;
  sparse_.clear();
  return zero;
}

}  // namespace cohext
