#include "hiersep/semiring/table_semiring.hpp"

#include "hiersep/error.hpp"
#include "hiersep/semiring/down_set.hpp"

namespace hiersep {

  namespace {
    std::vector<std::uint32_t> flatten(std::vector<std::vector<std::uint32_t>> const& t,
                                       std::size_t                               n) {
      if (t.size() != n) {
        throw InputError("semiring table must be square");
      }
      std::vector<std::uint32_t> out;
      out.reserve(n * n);
      for (auto const& row : t) {
        if (row.size() != n) {
          throw InputError("semiring table must be square");
        }
        for (auto x : row) {
          if (x >= n) {
            throw InputError("semiring table entry out of range");
          }
          out.push_back(x);
        }
      }
      return out;
    }
  }  // namespace

  IdemSemiring::IdemSemiring(std::vector<std::vector<element_type>> add_table,
                             std::vector<std::vector<element_type>> mul_table,
                             element_type                           zero,
                             element_type                           one)
      : n_(add_table.size()),
        add_(flatten(add_table, add_table.size())),
        mul_(flatten(mul_table, add_table.size())),
        zero_(zero),
        one_(one),
        top_(zero) {
    if (n_ == 0 || zero_ >= n_ || one_ >= n_) {
      throw InputError("semiring needs a non-empty carrier with valid 0 and 1");
    }
    for (element_type x = 0; x < n_; ++x) {
      if (add(x, x) != x) {
        throw InputError("addition is not idempotent");
      }
      if (add(zero_, x) != x) {
        throw InputError("zero is not neutral for addition");
      }
      if (mul(one_, x) != x || mul(x, one_) != x) {
        throw InputError("one is not neutral for multiplication");
      }
      if (mul(zero_, x) != zero_ || mul(x, zero_) != zero_) {
        throw InputError("zero does not annihilate");
      }
      for (element_type y = 0; y < n_; ++y) {
        if (add(x, y) != add(y, x)) {
          throw InputError("addition is not commutative");
        }
        for (element_type z = 0; z < n_; ++z) {
          if (add(add(x, y), z) != add(x, add(y, z))) {
            throw InputError("addition is not associative");
          }
          if (mul(mul(x, y), z) != mul(x, mul(y, z))) {
            throw InputError("multiplication is not associative");
          }
          if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z))
              || mul(add(x, y), z) != add(mul(x, z), mul(y, z))) {
            throw InputError("multiplication does not distribute over addition");
          }
        }
      }
    }
    for (element_type x = 0; x < n_; ++x) {
      top_ = add(top_, x);
    }
    if (n_ <= order_matrix_limit) {
      order_.resize(n_ * n_);
      for (element_type x = 0; x < n_; ++x) {
        for (element_type y = 0; y < n_; ++y) {
          order_[x * n_ + y] = add(x, y) == y;
        }
      }
    }
  }

  IdemSemiring IdemSemiring::trivial() {
    return IdemSemiring({{0}}, {{0}}, 0, 0);
  }

  std::vector<IdemSemiring::element_type>
  IdemSemiring::maximal_idempotents_below(element_type t) const {
    std::vector<element_type> xs;
    for (element_type f = 0; f < n_; ++f) {
      if (leq(f, t) && mul(f, f) == f) {
        xs.push_back(f);
      }
    }
    return maximal_elements(*this, std::move(xs));
  }

}  // namespace hiersep
