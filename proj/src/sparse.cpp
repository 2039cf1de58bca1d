#include "cohext/sparse.hpp"

namespace cohext {

namespace {

// dst += c * src over codes, dst at least as long as src.
void combo_axpy(std::vector<std::uint16_t>& dst, const std::vector<std::uint16_t>& src, std::uint16_t c,
                const detail::FieldData* fd) {
  if (dst.size() < src.size()) dst.resize(src.size(), 0);
  for (std::size_t i = 0; i < src.size(); ++i)
    if (src[i]) dst[i] = fd->add[dst[i] * fd->q + fd->mul[c * fd->q + src[i]]];
}

}  // namespace

bool SparseEchelon::insert(std::span<const Term> v) {
  const detail::FieldData* fd = f_.data();
  std::vector<Term> residual(v.begin(), v.end());
  std::vector<std::uint16_t> combo(n_gen_ + 1, 0);
  combo[n_gen_] = 1;
  const std::size_t gen = n_gen_++;
  while (!residual.empty()) {
    auto it = pivot_.find(residual.front().key);
    if (it == pivot_.end()) {
      Fe s = residual.front().c.inv();
      for (Term& t : residual) t.c = t.c * s;
      for (auto& x : combo) x = fd->mul[x * fd->q + s.code()];
      pivot_.emplace(residual.front().key, rows_.size());
      rows_.push_back({std::move(residual), std::move(combo)});
      independent_.push_back(gen);
      return true;
    }
    const Row& row = rows_[it->second];
    Fe c = -residual.front().c;
    residual = detail::add_terms(residual, row.v, c);
    combo_axpy(combo, row.combo, c.code(), fd);
  }
  relations_.push_back(std::move(combo));
  return false;
}

std::optional<Vec> SparseEchelon::express(std::span<const Term> v) const {
  const detail::FieldData* fd = f_.data();
  std::vector<Term> residual(v.begin(), v.end());
  std::vector<std::uint16_t> coeffs(n_gen_, 0);
  while (!residual.empty()) {
    auto it = pivot_.find(residual.front().key);
    if (it == pivot_.end()) return std::nullopt;
    const Row& row = rows_[it->second];
    Fe c = residual.front().c;
    residual = detail::add_terms(residual, row.v, -c);
    combo_axpy(coeffs, row.combo, c.code(), fd);
  }
  Vec out(n_gen_);
  for (std::size_t i = 0; i < n_gen_; ++i) out[i] = f_.raw(coeffs[i]);
  return out;
}

bool SparseEchelon::residual_is_zero(std::span<const Term> v) const {
  std::vector<Term> residual(v.begin(), v.end());
  while (!residual.empty()) {
    auto it = pivot_.find(residual.front().key);
    if (it == pivot_.end()) return false;
    residual = detail::add_terms(residual, rows_[it->second].v, -residual.front().c);
  }
  return true;
}

std::vector<Vec> SparseEchelon::relations() const {
  std::vector<Vec> out;
  out.reserve(relations_.size());
  for (const auto& r : relations_) {
    Vec v = zero_vec(f_, n_gen_);
    for (std::size_t i = 0; i < r.size(); ++i) v[i] = f_.raw(r[i]);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace cohext
