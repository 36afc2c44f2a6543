#include "revsynth/perm.hpp"

#include <bit>
#include <sstream>
#include <string>

namespace revsynth {

namespace {

void check_width(int width) {
  if (width < 1 || width > 30) {
    fail(Errc::WidthTooLarge,
         "register width " + std::to_string(width) + " out of range [1, 30]");
  }
}

}  // namespace

PermutationMap PermutationMap::identity(int width) {
  check_width(width);
  std::vector<std::uint32_t> image(std::size_t{1} << width);
  for (std::uint32_t i = 0; i < image.size(); ++i) image[i] = i;
  return PermutationMap(width, std::move(image));
}

PermutationMap PermutationMap::from_image(int width, std::vector<std::uint32_t> image) {
  check_width(width);
  const std::size_t n = std::size_t{1} << width;
  if (image.size() != n) {
    fail(Errc::LengthMismatch, "image has " + std::to_string(image.size()) +
                                   " entries, expected " + std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (image[i] >= n) {
      fail(Errc::IndexOutOfRange, "image[" + std::to_string(i) + "] = " +
                                      std::to_string(image[i]) + " exceeds " +
                                      std::to_string(n - 1));
    }
    if (seen[image[i]]) {
      fail(Errc::DuplicateImage,
           "output index " + std::to_string(image[i]) + " appears twice");
    }
    seen[image[i]] = true;
  }
  return PermutationMap(width, std::move(image));
}

PermutationMap PermutationMap::from_image_list(const std::vector<std::uint32_t>& one_based) {
  const std::size_t len = one_based.size();
  if (len < 2 || !std::has_single_bit(len)) {
    fail(Errc::LengthNotPowerOfTwo,
         "list has " + std::to_string(len) + " entries; expected 2^n with n >= 1");
  }
  std::vector<std::uint32_t> image(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (one_based[i] < 1 || one_based[i] > len) {
      fail(Errc::IndexOutOfRange, "entry " + std::to_string(i + 1) + " is " +
                                      std::to_string(one_based[i]) +
                                      ", outside [1, " + std::to_string(len) + "]");
    }
    image[i] = one_based[i] - 1;
  }
  return from_image(std::bit_width(len) - 1, std::move(image));
}

DenseBinaryMatrix::DenseBinaryMatrix(std::size_t dim)
    : DenseBinaryMatrix(dim, std::vector<std::uint64_t>(dim * dim, 0)) {}

DenseBinaryMatrix::DenseBinaryMatrix(std::size_t dim, std::vector<std::uint64_t> cells)
    : dim_(dim), cells_(std::move(cells)) {
  if (dim < 2 || !std::has_single_bit(dim)) {
    fail(Errc::LengthNotPowerOfTwo,
         "matrix side " + std::to_string(dim) + " is not 2^n with n >= 1");
  }
  if (cells_.size() != dim * dim) {
    fail(Errc::LengthMismatch, "cell count does not match side length");
  }
}

PureState::PureState(int width_, std::uint32_t index_) : width(width_), index(index_) {
  check_width(width);
  if (index >= (std::uint32_t{1} << width)) {
    fail(Errc::IndexOutOfRange, "basis index " + std::to_string(index) +
                                    " exceeds register of width " +
                                    std::to_string(width));
  }
}

PermutationMap validate_dense(const DenseBinaryMatrix& m) {
  const std::size_t n = m.dim();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const std::uint64_t v = m.at(r, c);
      if (v > 1) {
        fail(Errc::NonBinaryEntry, "entry at row " + std::to_string(r + 1) +
                                       ", column " + std::to_string(c + 1) +
                                       " is " + std::to_string(v) +
                                       "; condition 1 requires 0 or 1");
      }
    }
  }
  std::vector<std::uint32_t> image(n, 0);
  std::vector<std::uint32_t> col_weight(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t row_weight = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (m.at(r, c) == 1) {
        ++row_weight;
        ++col_weight[c];
        image[c] = static_cast<std::uint32_t>(r);
      }
    }
    if (row_weight != 1) {
      fail(Errc::RowOrColumnWeightNotOne,
           "row " + std::to_string(r + 1) + " holds " + std::to_string(row_weight) +
               " ones; condition 2 requires exactly one");
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (col_weight[c] != 1) {
      fail(Errc::RowOrColumnWeightNotOne,
           "column " + std::to_string(c + 1) + " holds " +
               std::to_string(col_weight[c]) + " ones; condition 2 requires exactly one");
    }
  }
  return PermutationMap::from_image(std::bit_width(n) - 1, std::move(image));
}

DenseBinaryMatrix to_dense(const PermutationMap& p) {
  DenseBinaryMatrix m(p.size());
  for (std::uint32_t c = 0; c < p.size(); ++c) m.set(p(c), c, 1);
  return m;
}

PermutationMap tensor(const PermutationMap& a, const PermutationMap& b, int width_cap) {
  const int width = a.width() + b.width();
  if (width > width_cap) {
    fail(Errc::WidthOverflow, "tensor result width " + std::to_string(width) +
                                  " exceeds cap " + std::to_string(width_cap));
  }
  std::vector<std::uint32_t> image(std::size_t{1} << width);
  const int shift = b.width();
  for (std::uint32_t p = 0; p < a.size(); ++p) {
    for (std::uint32_t r = 0; r < b.size(); ++r) {
      image[(std::size_t{p} << shift) | r] = (a(p) << shift) | b(r);
    }
  }
  return PermutationMap::from_image(width, std::move(image));
}

PermutationMap compose(const PermutationMap& a, const PermutationMap& b) {
  if (a.width() != b.width()) {
    fail(Errc::WidthMismatch, "compose of widths " + std::to_string(a.width()) +
                                  " and " + std::to_string(b.width()));
  }
  std::vector<std::uint32_t> image(a.size());
  for (std::uint32_t i = 0; i < image.size(); ++i) image[i] = a(b(i));
  return PermutationMap::from_image(a.width(), std::move(image));
}

PureState apply(const PermutationMap& p, const PureState& s) {
  if (p.width() != s.width) {
    fail(Errc::WidthMismatch, "state width " + std::to_string(s.width) +
                                  " does not match map width " +
                                  std::to_string(p.width()));
  }
  return PureState(s.width, p(s.index));
}

PermutationMap inverse(const PermutationMap& p) {
  std::vector<std::uint32_t> image(p.size());
  for (std::uint32_t i = 0; i < p.size(); ++i) image[p(i)] = i;
  return PermutationMap::from_image(p.width(), std::move(image));
}

Parity parity(const PermutationMap& p) {
  std::vector<bool> seen(p.size(), false);
  std::size_t transpositions = 0;
  for (std::uint32_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    std::size_t cycle_len = 0;
    for (std::uint32_t x = start; !seen[x]; x = p(x)) {
      seen[x] = true;
      ++cycle_len;
    }
    transpositions += cycle_len - 1;
  }
  return (transpositions % 2 == 0) ? Parity::even : Parity::odd;
}

}  // namespace revsynth
