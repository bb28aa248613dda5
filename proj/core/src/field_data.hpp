#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "drinfeld/finite_field.hpp"

namespace drinfeld::detail {

struct FieldData {
  FieldData(std::uint32_t p_, unsigned n, std::vector<std::uint32_t> mod);

  std::uint32_t p;
  unsigned degree;
  PrimeField fp;
  std::vector<std::uint32_t> modulus;  // monic, size degree + 1
  // x^N = sum of coeff * x^k over this list, coeff already negated
  std::vector<std::pair<unsigned, std::uint32_t>> tail;
  MatrixFp frobenius;  // column j holds (x^j)^p
  BigInt order;

  // Small-field tables, built on first request.
  mutable std::once_flag tables_once;
  mutable std::vector<FFElem> elements;      // lexicographic order
  mutable FFElem primitive;
  mutable std::vector<std::uint32_t> log;    // indexed by coordinate code
};

/// Integer code of a coordinate vector, sum c_i p^i. Small fields only.
std::uint64_t coord_code(const FieldData& f, std::span<const std::uint32_t> c);

struct RegistryState {
  std::shared_mutex mu;
  std::map<std::pair<std::uint32_t, unsigned>, std::unique_ptr<FieldData>> fields;
  std::map<std::pair<const FieldData*, const FieldData*>, std::unique_ptr<Embedding>> embeddings;
};

/// Builds the canonical embedding sub -> super (defined in tower.cpp).
std::unique_ptr<Embedding> compute_embedding(FieldId sub, FieldId super);

}  // namespace drinfeld::detail
