#include "pfusion/field.hpp"

#include "pfusion/errors.hpp"
#include "pfusion/permgroup.hpp"

namespace pfusion {

namespace {

std::vector<int> digits(int a, int p, int e) {
  std::vector<int> d(e);
  for (int i = 0; i < e; ++i, a /= p) d[i] = a % p;
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int a = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
  return a;
}

}  // namespace

GF::GF(int q) : q_(q) {
  if (q < 2 || q > 256) throw InputError("catalog", "field size " + std::to_string(q) + " unsupported");
  p_ = 0;
  for (int d = 2; d <= q; ++d)
    if (q % d == 0) {
      p_ = d;
      break;
    }
  e_ = 0;
  for (int r = q; r > 1; r /= p_) {
    if (r % p_) throw InputError("catalog", std::to_string(q) + " is not a prime power");
    ++e_;
  }
  add_.resize(q * q);
  neg_.resize(q);
  for (int a = 0; a < q; ++a) {
    auto da = digits(a, p_, e_);
    std::vector<int> dn(e_);
    for (int i = 0; i < e_; ++i) dn[i] = (p_ - da[i]) % p_;
    neg_[a] = undigits(dn, p_);
    for (int b = 0; b < q; ++b) {
      auto db = digits(b, p_, e_);
      for (int i = 0; i < e_; ++i) db[i] = (db[i] + da[i]) % p_;
      add_[a * q + b] = undigits(db, p_);
    }
  }
  // First monic polynomial (in code order) whose quotient ring is a field.
  for (int tail = 0; tail < q; ++tail) {
    auto f = digits(tail, p_, e_);  // x^e = -(f_0 + f_1 x + ...)
    auto polymul = [&](int a, int b) {
      auto da = digits(a, p_, e_), db = digits(b, p_, e_);
      std::vector<int> prod(2 * e_, 0);
      for (int i = 0; i < e_; ++i)
        for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (int k = 2 * e_ - 1; k >= e_; --k) {
        int c = prod[k];
        if (!c) continue;
        prod[k] = 0;
        for (int i = 0; i < e_; ++i) prod[k - e_ + i] = ((prod[k - e_ + i] - c * f[i]) % p_ + p_) % p_;
      }
      prod.resize(e_);
      return undigits(prod, p_);
    };
    mul_.assign(q * q, 0);
    inv_.assign(q, 0);
    bool field = true;
    for (int a = 0; a < q && field; ++a) {
      for (int b = 0; b < q; ++b) {
        int c = polymul(a, b);
        mul_[a * q + b] = c;
        if (c == 1) inv_[a] = b;
      }
      if (a && !inv_[a]) field = false;
    }
    if (field) break;
  }
  for (int a = 2; a < q || q == 2; ++a) {
    if (q == 2) {
      prim_ = 1;
      break;
    }
    int o = 1;
    for (int x = a; x != 1; x = mul(x, a)) ++o;
    if (o == q - 1) {
      prim_ = a;
      break;
    }
  }
}

int GF::pow(int a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::vector<int> GF::prime_basis() const {
  std::vector<int> b;
  int x = 1;
  for (int i = 0; i < e_; ++i) {
    b.push_back(x);
    x = mul(x, prim_);
  }
  return b;
}

Matrix identity_matrix(const GF&, int n) {
  Matrix m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

Matrix mat_mul(const GF& f, int n, const Matrix& a, const Matrix& b) {
  Matrix c(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      int x = a[i * n + k];
      if (!x) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] = f.add(c[i * n + j], f.mul(x, b[k * n + j]));
    }
  return c;
}

int mat_det(const GF& f, int n, Matrix a) {
  int det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r * n + col]) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a[piv * n + j], a[col * n + j]);
      det = f.neg(det);
    }
    int d = a[col * n + col];
    det = f.mul(det, d);
    int di = f.inv(d);
    for (int r = col + 1; r < n; ++r) {
      int factor = f.mul(a[r * n + col], di);
      if (!factor) continue;
      for (int j = col; j < n; ++j) a[r * n + j] = f.sub(a[r * n + j], f.mul(factor, a[col * n + j]));
    }
  }
  return det;
}

PointSet::PointSet(const GF& f, int n, bool projective) : f_(f), n_(n), projective_(projective) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= f.q();
  std::uint64_t count = projective ? (total - 1) / (f.q() - 1) : total - 1;
  if (count > static_cast<std::uint64_t>(kMaxDegree))
    throw CapError("catalog", "natural action degree " + std::to_string(count) + " exceeds cap " +
                                  std::to_string(kMaxDegree));
  std::vector<int> v(n, 0);
  for (std::uint64_t c = 1; c < total; ++c) {
    std::uint64_t x = c;
    for (int i = 0; i < n; ++i, x /= f.q()) v[i] = static_cast<int>(x % f.q());
    if (projective) {
      int lead = 0;
      for (int i = 0; i < n; ++i)
        if (v[i]) {
          lead = v[i];
          break;
        }
      if (lead != 1) continue;
    }
    index_[code(v)] = static_cast<int>(pts_.size());
    pts_.push_back(v);
  }
}

std::uint64_t PointSet::code(const std::vector<int>& v) const {
  std::uint64_t c = 0;
  for (int i = n_ - 1; i >= 0; --i) c = c * f_.q() + v[i];
  return c;
}

int PointSet::index(std::vector<int> v) const {
  if (projective_) {
    int lead = 0;
    for (int x : v)
      if (x) {
        lead = x;
        break;
      }
    if (!lead) throw InputError("catalog", "zero vector has no projective point");
    int li = f_.inv(lead);
    for (int& x : v) x = f_.mul(x, li);
  }
  auto it = index_.find(code(v));
  if (it == index_.end()) throw InputError("catalog", "vector not in point set");
  return it->second;
}

Perm PointSet::act(const Matrix& m) const {
  std::vector<Point> img(pts_.size());
  std::vector<int> w(n_);
  for (std::size_t i = 0; i < pts_.size(); ++i) {
    const auto& v = pts_[i];
    for (int j = 0; j < n_; ++j) {
      int s = 0;
      for (int k = 0; k < n_; ++k)
        if (v[k]) s = f_.add(s, f_.mul(v[k], m[k * n_ + j]));
      w[j] = s;
    }
    img[i] = static_cast<Point>(index(w));
  }
  return Perm(std::move(img));
}

}  // namespace pfusion
