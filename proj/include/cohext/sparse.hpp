#pragma once
// Incremental echelon basis for sparse vectors, with each stored row tracked as
// a combination of the inserted generators. Gives ranks, relations among
// generators and solutions of sparse systems without forming dense matrices.

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "cohext/combo.hpp"
#include "cohext/linalg.hpp"

namespace cohext {

class SparseEchelon {
 public:
  explicit SparseEchelon(Field f) : f_(std::move(f)) {}

  /// Adds the next generator (numbered in insertion order). Returns true when
  /// it is independent of the earlier ones; otherwise a relation is recorded.
  bool insert(std::span<const Term> v);

  /// Coefficients c with sum c_g gen_g == v, or nullopt if v is outside the span.
  std::optional<Vec> express(std::span<const Term> v) const;
  bool contains(std::span<const Term> v) const { return residual_is_zero(v); }

  std::size_t generators() const noexcept { return n_gen_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  /// Basis of the relation space; vector g has length generators() at the time
  /// it is read (shorter stored vectors are zero padded).
  std::vector<Vec> relations() const;
  /// Generator indices that were independent when inserted.
  const std::vector<std::size_t>& independent() const noexcept { return independent_; }

 private:
  struct Row {
    std::vector<Term> v;               // leading key has coefficient one
    std::vector<std::uint16_t> combo;  // codes over generators
  };

  bool residual_is_zero(std::span<const Term> v) const;

  Field f_;
  std::size_t n_gen_ = 0;
  std::vector<Row> rows_;
  std::unordered_map<std::uint64_t, std::size_t> pivot_;
  std::vector<std::vector<std::uint16_t>> relations_;
  std::vector<std::size_t> independent_;
};

}  // namespace cohext
