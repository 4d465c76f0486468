#include "fishburn/truncated_series.hpp"

#include <sstream>
#include <stdexcept>

namespace fishburn {

TruncatedSeries::TruncatedSeries(Dims dims) : dims_(dims) {
  if (dims.t < 0 || dims.u < 0 || dims.v < 0) throw std::invalid_argument("negative series dimension");
  c_.assign(static_cast<std::size_t>(dims.t + 1) * static_cast<std::size_t>(dims.u + 1) *
                static_cast<std::size_t>(dims.v + 1),
            BigInt(0));
}

TruncatedSeries TruncatedSeries::constant(Dims dims, const BigInt& c) { return monomial(dims, 0, 0, 0, c); }

TruncatedSeries TruncatedSeries::monomial(Dims dims, int i, int j, int k, const BigInt& c) {
  TruncatedSeries s(dims);
  if (s.inside(i, j, k)) s.at(i, j, k) = c;
  return s;
}

BigInt TruncatedSeries::coeff(int i, int j, int k) const {
  return inside(i, j, k) ? c_[index(i, j, k)] : BigInt(0);
}

BigInt& TruncatedSeries::at(int i, int j, int k) {
  if (!inside(i, j, k)) throw std::out_of_range("series index outside the box");
  return c_[index(i, j, k)];
}

bool TruncatedSeries::is_zero() const {
  for (const auto& c : c_) {
    if (c != 0) return false;
  }
  return true;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  if (!(dims_ == o.dims_)) throw std::invalid_argument("series boxes differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  if (!(dims_ == o.dims_)) throw std::invalid_argument("series boxes differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const BigInt& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

TruncatedSeries operator-(TruncatedSeries a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (!(a.dims_ == b.dims_)) throw std::invalid_argument("series boxes differ");
  const Dims d = a.dims_;
  TruncatedSeries out(d);
  BigInt prod;
  for (int i1 = 0; i1 <= d.t; ++i1) {
    for (int j1 = 0; j1 <= d.u; ++j1) {
      for (int k1 = 0; k1 <= d.v; ++k1) {
        const BigInt& x = a.c_[a.index(i1, j1, k1)];
        if (x == 0) continue;
        for (int i2 = 0; i1 + i2 <= d.t; ++i2) {
          for (int j2 = 0; j1 + j2 <= d.u; ++j2) {
            for (int k2 = 0; k1 + k2 <= d.v; ++k2) {
              const BigInt& y = b.c_[b.index(i2, j2, k2)];
              if (y == 0) continue;
              mpz_mul(prod.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
              out.c_[out.index(i1 + i2, j1 + j2, k1 + k2)] += prod;
            }
          }
        }
      }
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
  TruncatedSeries result = constant(dims_, 1);
  TruncatedSeries base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
  const BigInt& c0 = c_[0];
  if (c0 != 1 && c0 != -1) throw std::domain_error("series constant term is not a unit");
  // Solve a * g = 1 in lexicographic order of exponents; every other term
  // a_beta g_{alpha - beta} involves a lexicographically smaller index.
  TruncatedSeries g(dims_);
  const Dims d = dims_;
  for (int i = 0; i <= d.t; ++i) {
    for (int j = 0; j <= d.u; ++j) {
      for (int k = 0; k <= d.v; ++k) {
        BigInt acc = (i == 0 && j == 0 && k == 0) ? 1 : 0;
        for (int bi = 0; bi <= i; ++bi) {
          for (int bj = 0; bj <= j; ++bj) {
            for (int bk = 0; bk <= k; ++bk) {
              if (bi == 0 && bj == 0 && bk == 0) continue;
              const BigInt& x = c_[index(bi, bj, bk)];
              if (x == 0) continue;
              acc -= x * g.c_[index(i - bi, j - bj, k - bk)];
            }
          }
        }
        g.c_[index(i, j, k)] = c0 == 1 ? acc : BigInt(-acc);
      }
    }
  }
  return g;
}

TruncatedSeries TruncatedSeries::resized(Dims dims) const {
  TruncatedSeries out(dims);
  for (int i = 0; i <= std::min(dims.t, dims_.t); ++i) {
    for (int j = 0; j <= std::min(dims.u, dims_.u); ++j) {
      for (int k = 0; k <= std::min(dims.v, dims_.v); ++k) out.at(i, j, k) = coeff(i, j, k);
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::substitute_u_uv() const {
  TruncatedSeries out(dims_);
  for (int i = 0; i <= dims_.t; ++i) {
    for (int j = 0; j <= dims_.u; ++j) {
      for (int k = 0; j + k <= dims_.v; ++k) out.at(i, j, j + k) = coeff(i, j, k);
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::at_v_one() const {
  TruncatedSeries out(Dims{dims_.t, dims_.u, 0});
  for (int i = 0; i <= dims_.t; ++i) {
    for (int j = 0; j <= dims_.u; ++j) {
      BigInt acc = 0;
      for (int k = 0; k <= dims_.v; ++k) acc += coeff(i, j, k);
      out.at(i, j, 0) = acc;
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::substitute_v(const TruncatedSeries& V) const {
  if (V.dims_.t != dims_.t || V.dims_.u != dims_.u) throw std::invalid_argument("series boxes differ");
  const Dims flat{dims_.t, dims_.u, 0};
  const TruncatedSeries Vflat = V.resized(flat);
  for (int i = 0; i <= V.dims_.t; ++i) {
    for (int j = 0; j <= V.dims_.u; ++j) {
      for (int k = 1; k <= V.dims_.v; ++k) {
        if (V.coeff(i, j, k) != 0) throw std::invalid_argument("substituted series involves v");
      }
    }
  }
  // Horner in v.
  TruncatedSeries acc(flat);
  for (int k = dims_.v; k >= 0; --k) {
    acc = acc * Vflat;
    for (int i = 0; i <= dims_.t; ++i) {
      for (int j = 0; j <= dims_.u; ++j) acc.at(i, j, 0) += coeff(i, j, k);
    }
  }
  return acc;
}

std::string TruncatedSeries::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i <= dims_.t; ++i) {
    for (int j = 0; j <= dims_.u; ++j) {
      for (int k = 0; k <= dims_.v; ++k) {
        const BigInt& c = c_[index(i, j, k)];
        if (c == 0) continue;
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        first = false;
        out << BigInt(abs(c)).get_str();
        if (i > 0) out << "*t^" << i;
        if (j > 0) out << "*u^" << j;
        if (k > 0) out << "*v^" << k;
      }
    }
  }
  return first ? "0" : out.str();
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.dims_ == b.dims_ && a.c_ == b.c_; }

}  // namespace fishburn
