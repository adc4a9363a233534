// Copyright 2026 The polarcl Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polarcl/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string>

#include "polarcl/combinatorics.hpp"

namespace polarcl {

Mat rref(const Field& f, const Mat& m) {
  Mat a = m;
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    a.row(piv).swap(a.row(r));
    const Elem s = f.inv(a(r, c));
    for (int j = 0; j < cols; ++j) a(r, j) = f.mul(a(r, j), s);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Elem factor = a(i, c);
      for (int j = 0; j < cols; ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
    }
    ++r;
  }
  return a.topRows(r);
}

int rank(const Field& f, const Mat& m) { return static_cast<int>(rref(f, m).rows()); }

Mat nullspace(const Field& f, const Mat& m, int cols) {
  const Mat r = m.rows() == 0 ? Mat(0, cols) : rref(f, m);
  std::vector<int> pivots;
  for (int i = 0; i < r.rows(); ++i) {
    int c = 0;
    while (r(i, c) == 0) ++c;
    pivots.push_back(c);
  }
  std::vector<int> free_cols;
  for (int c = 0, p = 0; c < cols; ++c) {
    if (p < static_cast<int>(pivots.size()) && pivots[p] == c) {
      ++p;
    } else {
      free_cols.push_back(c);
    }
  }
  Mat out(static_cast<int>(free_cols.size()), cols);
  out.setZero();
  for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
    out(k, free_cols[k]) = 1;
    for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
      out(k, pivots[i]) = f.neg(r(i, free_cols[k]));
  }
  return out.rows() == 0 ? out : rref(f, out);
}

Vec normalized(const Field& f, const Vec& v) {
  for (int i = 0; i < v.size(); ++i) {
    if (v(i) != 0) {
      const Elem s = f.inv(v(i));
      Vec w(v.size());
      for (int j = 0; j < v.size(); ++j) w(j) = f.mul(v(j), s);
      return w;
    }
  }
  return v;
}

Elem dot(const Field& f, const Vec& a, const Vec& b) {
  Elem s = 0;
  for (int i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a(i), b(i)));
  return s;
}

std::string vec_key(const Vec& v) {
  std::string k(static_cast<std::size_t>(v.size()), '\0');
  for (int i = 0; i < v.size(); ++i) k[i] = static_cast<char>(v(i));
  return k;
}

std::vector<Vec> projective_points(const Field& f, int n) {
  std::vector<Vec> out;
  const int q = f.order();
  for (int lead = 0; lead < n; ++lead) {
    const int tail = n - lead - 1;
    long long count = 1;
    for (int i = 0; i < tail; ++i) count *= q;
    for (long long code = 0; code < count; ++code) {
      Vec v = Vec::Zero(n);
      v(lead) = 1;
      long long c = code;
      for (int i = n - 1; i > lead; --i) {
        v(i) = static_cast<Elem>(c % q);
        c /= q;
      }
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Vec& a, const Vec& b) { return vec_key(a) < vec_key(b); });
  return out;
}

Subspace Subspace::span(const Field& f, const Mat& rows) {
  Subspace s(static_cast<int>(rows.cols()));
  if (rows.rows() > 0) s.basis_ = rref(f, rows);
  return s;
}

Subspace Subspace::point(const Field& f, const Vec& v) {
  Mat m(1, v.size());
  m.row(0) = v.transpose();
  return span(f, m);
}

Subspace Subspace::parse(const Field& f, std::string_view text, int n) {
  std::vector<std::vector<int>> rows;
  std::size_t start = 0;
  while (start <= text.size() && !text.empty()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(start, end - start);
    std::vector<int> entries;
    std::size_t p = 0;
    while (p <= row.size()) {
      std::size_t comma = row.find(',', p);
      if (comma == std::string_view::npos) comma = row.size();
      std::string_view tok = row.substr(p, comma - p);
      while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
      while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
      int value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || value < 0 ||
          value >= f.order()) {
        throw std::invalid_argument("bad field element '" + std::string(tok) + "' in subspace '" +
                                    std::string(text) + "'");
      }
      entries.push_back(value);
      p = comma + 1;
    }
    if (static_cast<int>(entries.size()) != n) {
      throw std::invalid_argument("row of length " + std::to_string(entries.size()) +
                                  " in subspace '" + std::string(text) + "', expected " +
                                  std::to_string(n));
    }
    rows.push_back(std::move(entries));
    start = end + 1;
  }
  Mat m(static_cast<int>(rows.size()), n);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < n; ++j) m(i, j) = static_cast<Elem>(rows[i][j]);
  Subspace s = span(f, m);
  if (s.basis_.rows() != m.rows() || s.basis_ != m) {
    throw std::invalid_argument("subspace '" + std::string(text) +
                                "' is not in reduced echelon form; normalized form: '" +
                                s.serialize() + "'");
  }
  return s;
}

std::string Subspace::serialize() const {
  std::string out;
  for (int i = 0; i < basis_.rows(); ++i) {
    if (i > 0) out += ';';
    for (int j = 0; j < basis_.cols(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(basis_(i, j));
    }
  }
  return out;
}

std::string Subspace::key() const {
  std::string k(static_cast<std::size_t>(basis_.size()), '\0');
  for (int i = 0; i < basis_.rows(); ++i)
    for (int j = 0; j < basis_.cols(); ++j) k[i * basis_.cols() + j] = static_cast<char>(basis_(i, j));
  return k;
}

std::vector<Vec> Subspace::points(const Field& f) const {
  std::vector<Vec> out;
  const int r = static_cast<int>(basis_.rows());
  const int n = static_cast<int>(basis_.cols());
  if (r == 0) return out;
  for (const Vec& c : projective_points(f, r)) {
    Vec v = Vec::Zero(n);
    for (int i = 0; i < r; ++i) {
      if (c(i) == 0) continue;
      for (int j = 0; j < n; ++j) v(j) = f.add(v(j), f.mul(c(i), basis_(i, j)));
    }
    out.push_back(v);
  }
  std::sort(out.begin(), out.end(),
            [](const Vec& a, const Vec& b) { return vec_key(a) < vec_key(b); });
  return out;
}

bool Subspace::contains(const Field& f, const Vec& v) const {
  Mat m(basis_.rows() + 1, basis_.cols());
  m.topRows(basis_.rows()) = basis_;
  m.row(basis_.rows()) = v.transpose();
  return rank(f, m) == basis_.rows();
}

const char* to_string(SectionType t) {
  switch (t) {
    case SectionType::kTangent: return "tangent";
    case SectionType::kHyperbolic: return "hyperbolic";
    case SectionType::kElliptic: return "elliptic";
    case SectionType::kParabolic: return "parabolic";
    case SectionType::kHermitian: return "hermitian_nondegenerate";
  }
  return "?";
}

PolarGeometry::PolarGeometry(const PolarSpaceDescriptor& desc)
    : desc_(PolarSpaceDescriptor::make(desc.family, desc.rank, desc.q)),
      field_(desc.q),
      n_(desc.vector_dimension()) {
  const int d = desc_.rank;
  form_ = Mat::Zero(n_, n_);
  pairing_ = Mat::Zero(n_, n_);
  switch (desc_.family) {
    case Family::kHyperbolic:
      kind_ = FormKind::kQuadratic;
      for (int i = 0; i < d; ++i) form_(2 * i, 2 * i + 1) = 1;
      break;
    case Family::kParabolic:
      kind_ = FormKind::kQuadratic;
      form_(0, 0) = 1;
      for (int i = 1; i <= d; ++i) form_(2 * i - 1, 2 * i) = 1;
      break;
    case Family::kElliptic: {
      kind_ = FormKind::kQuadratic;
      for (int i = 0; i < d; ++i) form_(2 * i, 2 * i + 1) = 1;
      auto [b, c] = field_.find_irreducible_quadratic();
      form_(2 * d, 2 * d) = 1;
      form_(2 * d, 2 * d + 1) = b;
      form_(2 * d + 1, 2 * d + 1) = c;
      break;
    }
    case Family::kHermitianOdd:
    case Family::kHermitianEven:
      kind_ = FormKind::kHermitian;
      for (int i = 0; i < n_; ++i) form_(i, i) = 1;
      break;
    case Family::kSymplectic:
      kind_ = FormKind::kAlternating;
      for (int i = 0; i < d; ++i) {
        form_(i, d + i) = 1;
        form_(d + i, i) = field_.neg(1);
      }
      break;
  }
  if (kind_ == FormKind::kQuadratic) {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) pairing_(i, j) = field_.add(form_(i, j), form_(j, i));
  } else {
    pairing_ = form_;
  }
  for (const Vec& v : projective_points(field_, n_))
    if (is_isotropic(v)) points_.push_back(v);
}

Elem PolarGeometry::evaluate_form(const Vec& v) const {
  if (v.size() != n_) {
    throw std::invalid_argument("vector of length " + std::to_string(v.size()) + " for " +
                                desc_.name() + ", expected " + std::to_string(n_));
  }
  const Field& f = field_;
  Elem s = 0;
  switch (kind_) {
    case FormKind::kQuadratic:
      for (int i = 0; i < n_; ++i) {
        if (v(i) == 0) continue;
        for (int j = i; j < n_; ++j)
          if (form_(i, j) != 0) s = f.add(s, f.mul(form_(i, j), f.mul(v(i), v(j))));
      }
      return s;
    case FormKind::kHermitian:
      return pair(v, v);
    case FormKind::kAlternating:
      return 0;
  }
  return 0;
}

Elem PolarGeometry::pair(const Vec& u, const Vec& v) const { return dot(field_, u, functional(v)); }

Vec PolarGeometry::functional(const Vec& w) const {
  Vec x = w;
  if (kind_ == FormKind::kHermitian)
    for (int i = 0; i < x.size(); ++i) x(i) = field_.conjugate(x(i));
  Vec h = Vec::Zero(n_);
  for (int i = 0; i < n_; ++i) {
    Elem s = 0;
    for (int j = 0; j < n_; ++j)
      if (pairing_(i, j) != 0) s = field_.add(s, field_.mul(pairing_(i, j), x(j)));
    h(i) = s;
  }
  return h;
}

bool PolarGeometry::is_isotropic(const Vec& v) const { return evaluate_form(v) == 0; }

bool PolarGeometry::is_totally_isotropic(const Subspace& s) const {
  const Mat& b = s.basis();
  for (int i = 0; i < b.rows(); ++i) {
    const Vec bi = b.row(i).transpose();
    if (!is_isotropic(bi)) return false;
    for (int j = i + 1; j < b.rows(); ++j)
      if (pair(bi, b.row(j).transpose()) != 0) return false;
  }
  return true;
}

Subspace PolarGeometry::perp(const Subspace& s) const {
  const Mat& b = s.basis();
  Mat m(b.rows(), n_);
  for (int i = 0; i < b.rows(); ++i) m.row(i) = functional(b.row(i).transpose()).transpose();
  return Subspace::span(field_, nullspace(field_, m, n_));
}

long long PolarGeometry::section_point_count(const Vec& hyperplane) const {
  if (hyperplane.size() != n_ || (hyperplane.array() == 0).all())
    throw std::invalid_argument("degenerate hyperplane");
  long long count = 0;
  for (const Vec& p : points_)
    if (dot(field_, hyperplane, p) == 0) ++count;
  return count;
}

SectionType PolarGeometry::classify_hyperplane_section(const Vec& hyperplane) const {
  const long long count = section_point_count(hyperplane);
  const int m = n_ - 2;  // projective dimension of the hyperplane
  const BigInt q(desc_.q);
  auto points = [&](int r, int e2) -> long long {
    if (r <= 0) return 0;
    const PolarCounts pc(PolarSpaceDescriptor{Family::kSymplectic, r, desc_.q});
    return to_int64(gaussian_binomial(r, 1, q) * (pc.q_half_power(2LL * (r - 1) + e2) + 1));
  };
  if (kind_ == FormKind::kQuadratic) {
    if (m % 2 == 1) {
      if (count == points((m + 1) / 2, 0)) return SectionType::kHyperbolic;
      if (count == points((m - 1) / 2, 4)) return SectionType::kElliptic;
    } else if (count == points(m / 2, 2)) {
      return SectionType::kParabolic;
    }
  } else if (kind_ == FormKind::kHermitian) {
    if (count == (m % 2 == 1 ? points((m + 1) / 2, 1) : points(m / 2, 3))) return SectionType::kHermitian;
  }
  return SectionType::kTangent;
}

}  // namespace polarcl
