#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "revsynth/error.hpp"

namespace revsynth {

/// Default cap on register width. Everything in this library is O(2^n) or
/// worse, so widths past this are a mistake rather than a workload.
inline constexpr int kDefaultWidthCap = 20;

enum class Parity { even, odd };

/// A reversible mapping on an n-line register, stored as a permutation of
/// basis indices: image()[i] is the output index produced by input index i.
///
/// Index convention (used everywhere in this library): the basis index of
/// register value (q1, q2, ..., qn) is sum q_i * 2^(n-i), i.e. the
/// first-listed line is the most significant bit. Indices are 0-based
/// internally; the text formats are 1-based.
class PermutationMap {
public:
  static PermutationMap identity(int width);

  /// Builds from a 0-based image vector; rejects non-bijections.
  static PermutationMap from_image(int width, std::vector<std::uint32_t> image);

  /// Builds from the 1-based row list notation (x_1, ..., x_N): input i maps
  /// to output x_i. The list length must be 2^n for some n >= 1.
  static PermutationMap from_image_list(const std::vector<std::uint32_t>& one_based);

  int width() const noexcept { return width_; }
  std::size_t size() const noexcept { return image_.size(); }
  std::uint32_t operator()(std::uint32_t input) const { return image_[input]; }
  const std::vector<std::uint32_t>& image() const noexcept { return image_; }

  friend bool operator==(const PermutationMap&, const PermutationMap&) = default;

private:
  PermutationMap(int width, std::vector<std::uint32_t> image)
      : width_(width), image_(std::move(image)) {}

  int width_;
  std::vector<std::uint32_t> image_;
};

/// Unvalidated square 0/1-ish grid. This is the raw input form; validation
/// produces a PermutationMap or an error. The side length must be a power of
/// two (>= 2), which is the only shape requirement enforced here.
class DenseBinaryMatrix {
public:
  explicit DenseBinaryMatrix(std::size_t dim);
  DenseBinaryMatrix(std::size_t dim, std::vector<std::uint64_t> cells);

  std::size_t dim() const noexcept { return dim_; }
  std::uint64_t at(std::size_t row, std::size_t col) const {
    return cells_[row * dim_ + col];
  }
  void set(std::size_t row, std::size_t col, std::uint64_t v) {
    cells_[row * dim_ + col] = v;
  }

private:
  std::size_t dim_;
  std::vector<std::uint64_t> cells_;
};

/// A single basis state of an n-line register.
struct PureState {
  PureState(int width, std::uint32_t index);

  int width;
  std::uint32_t index;

  friend bool operator==(const PureState&, const PureState&) = default;
};

/// Checks both well-formedness conditions (entries are 0/1; every row and
/// every column holds exactly one 1) and returns the permutation acting on
/// column vectors: a 1 at (row r, column c) maps input c to output r.
PermutationMap validate_dense(const DenseBinaryMatrix& m);

/// The matrix of p: a 1 at (p(c), c) for every column c.
DenseBinaryMatrix to_dense(const PermutationMap& p);

/// Kronecker product at the permutation level: the left factor supplies the
/// high index bits. Result width is a.width + b.width, bounded by width_cap.
PermutationMap tensor(const PermutationMap& a, const PermutationMap& b,
                      int width_cap = kDefaultWidthCap);

/// Matrix product on column vectors: apply b first, then a.
PermutationMap compose(const PermutationMap& a, const PermutationMap& b);

PureState apply(const PermutationMap& p, const PureState& s);

PermutationMap inverse(const PermutationMap& p);

/// Sign of the permutation, via cycle decomposition.
Parity parity(const PermutationMap& p);

}  // namespace revsynth
