#include "statcert/mpec.hpp"

#include <algorithm>

#include "statcert/errors.hpp"
#include "statcert/linalg.hpp"

namespace statcert {

std::optional<RMatrix> FunctionData::hessian_or_zero(long n) const {
  if (affine) return RMatrix::Zero(n, n);
  return hessian;
}

namespace {

void validate_function(const FunctionData& fd, long n, const char* what) {
  if (fd.gradient.size() != n)
    throw InputError(std::string(what) + ": gradient dimension mismatch");
  if (fd.hessian) {
    if (fd.hessian->rows() != n || fd.hessian->cols() != n)
      throw InputError(std::string(what) + ": Hessian dimension mismatch");
    for (long i = 0; i < n; ++i)
      for (long j = i + 1; j < n; ++j)
        if ((*fd.hessian)(i, j) != (*fd.hessian)(j, i))
          throw InputError(std::string(what) + ": Hessian is not symmetric");
    if (fd.affine)
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
          if ((*fd.hessian)(i, j) != 0)
            throw InputError(std::string(what) + ": affine function with nonzero Hessian");
  }
}

}  // namespace

void validate(const MpecPoint& P) {
  if (P.n < 1) throw InputError("ambient dimension must be positive");
  if (P.x.size() != P.n) throw InputError("candidate point dimension mismatch");
  if (P.G.size() != P.H.size()) throw InputError("pair constraint lists differ in length");
  validate_function(P.f, P.n, "objective");
  for (const auto& fd : P.g) validate_function(fd, P.n, "inequality");
  for (const auto& fd : P.h) validate_function(fd, P.n, "equality");
  for (const auto& fd : P.G) validate_function(fd, P.n, "pair function");
  for (const auto& fd : P.H) validate_function(fd, P.n, "pair function");
  for (long i = 0; i < P.num_g(); ++i)
    if (sign(P.g[i].value) > 0)
      throw InputError("g_i(x) <= 0 violated at i = " + std::to_string(i + 1));
  for (long i = 0; i < P.num_h(); ++i)
    if (sign(P.h[i].value) != 0)
      throw InputError("h_i(x) = 0 violated at i = " + std::to_string(i + 1));
  for (long i = 0; i < P.num_pairs(); ++i) {
    if (sign(P.G[i].value) < 0)
      throw InputError("G_i(x) >= 0 violated at i = " + std::to_string(i + 1));
    if (sign(P.H[i].value) < 0)
      throw InputError("H_i(x) >= 0 violated at i = " + std::to_string(i + 1));
    if (sign(P.G[i].value * P.H[i].value) != 0)
      throw InputError("G_i(x) H_i(x) = 0 violated at i = " + std::to_string(i + 1));
  }
}

RVector encode_value(const MpecPoint& P) {
  RVector v = zero_vector(P.image_dim());
  long r = 0;
  for (const auto& fd : P.g) v(r++) = fd.value;
  for (const auto& fd : P.h) v(r++) = fd.value;
  for (long i = 0; i < P.num_pairs(); ++i) {
    v(r++) = -P.G[i].value;
    v(r++) = -P.H[i].value;
  }
  return v;
}

RMatrix encode_jacobian(const MpecPoint& P) {
  RMatrix J(P.image_dim(), P.n);
  long r = 0;
  for (const auto& fd : P.g) J.row(r++) = fd.gradient.transpose();
  for (const auto& fd : P.h) J.row(r++) = fd.gradient.transpose();
  for (long i = 0; i < P.num_pairs(); ++i) {
    J.row(r++) = -P.G[i].gradient.transpose();
    J.row(r++) = -P.H[i].gradient.transpose();
  }
  return J;
}

PolyUnion encode_omega(const MpecPoint& P) {
  const long l = P.num_g(), p = P.num_h(), q = P.num_pairs();
  const long dim = P.image_dim();
  PolyUnion pu(dim);
  for (unsigned long mask = 0; mask < (1ul << q); ++mask) {
    LinearSystem sys(dim);
    for (long i = 0; i < l; ++i) {
      RVector e = zero_vector(dim);
      e(i) = 1;
      sys.add_ineq(e, 0);
    }
    for (long i = 0; i < p; ++i) {
      RVector e = zero_vector(dim);
      e(l + i) = 1;
      sys.add_eq(e, 0);
    }
    for (long j = 0; j < q; ++j) {
      const long base = l + p + 2 * j;
      RVector e1 = zero_vector(dim), e2 = zero_vector(dim);
      e1(base) = 1;
      e2(base + 1) = 1;
      if (mask & (1ul << j)) {
        sys.add_ineq(e1, 0);
        sys.add_eq(e2, 0);
      } else {
        sys.add_eq(e1, 0);
        sys.add_ineq(e2, 0);
      }
    }
    pu.pieces.push_back(Polyhedron(sys));
  }
  return pu;
}

IndexSets classify_indices(const MpecPoint& P) {
  validate(P);
  IndexSets sets;
  for (long i = 0; i < P.num_g(); ++i)
    if (sign(P.g[i].value) == 0) sets.act_g.push_back(i);
  for (long i = 0; i < P.num_pairs(); ++i) {
    const int sG = sign(P.G[i].value), sH = sign(P.H[i].value);
    if (sG > 0)
      sets.plus_zero.push_back(i);
    else if (sH > 0)
      sets.zero_plus.push_back(i);
    else
      sets.zero_zero.push_back(i);
  }
  return sets;
}

bool tlin_contains(const MpecPoint& P, const IndexSets& sets, const RVector& u) {
  if (u.size() != P.n) throw InputError("direction dimension mismatch");
  for (long i : sets.act_g)
    if (sign(P.g[i].gradient.dot(u)) > 0) return false;
  for (const auto& fd : P.h)
    if (sign(fd.gradient.dot(u)) != 0) return false;
  for (long i : sets.zero_plus)
    if (sign(P.G[i].gradient.dot(u)) != 0) return false;
  for (long i : sets.plus_zero)
    if (sign(P.H[i].gradient.dot(u)) != 0) return false;
  for (long i : sets.zero_zero) {
    const Rational a = P.G[i].gradient.dot(u);
    const Rational b = P.H[i].gradient.dot(u);
    if (sign(a) < 0 || sign(b) < 0 || sign(a * b) != 0) return false;
  }
  return true;
}

bool critical_contains(const MpecPoint& P, const IndexSets& sets, const RVector& u) {
  return tlin_contains(P, sets, u) && sign(P.f.gradient.dot(u)) <= 0;
}

DirIndexSets directional_index_sets(const MpecPoint& P, const IndexSets& sets,
                                    const RVector& u) {
  if (!tlin_contains(P, sets, u))
    throw InputError("direction is not in the linearization cone");
  DirIndexSets out;
  for (long i : sets.act_g)
    if (sign(P.g[i].gradient.dot(u)) == 0) out.act_g.push_back(i);
  for (long i : sets.zero_zero) {
    const int sG = sign(P.G[i].gradient.dot(u));
    const int sH = sign(P.H[i].gradient.dot(u));
    if (sG > 0)
      out.plus_zero.push_back(i);
    else if (sH > 0)
      out.zero_plus.push_back(i);
    else
      out.zero_zero.push_back(i);
  }
  return out;
}

std::vector<LinearizationBranch> tlin_branches(const MpecPoint& P, const IndexSets& sets) {
  std::vector<LinearizationBranch> out;
  const auto& zz = sets.zero_zero;
  const unsigned long count = 1ul << zz.size();
  for (unsigned long mask = 0; mask < count; ++mask) {
    LinearizationBranch br{{}, LinearSystem(P.n)};
    for (long i : sets.act_g) br.sys.add_ineq(P.g[i].gradient, 0);
    for (const auto& fd : P.h) br.sys.add_eq(fd.gradient, 0);
    for (long i : sets.zero_plus) br.sys.add_eq(P.G[i].gradient, 0);
    for (long i : sets.plus_zero) br.sys.add_eq(P.H[i].gradient, 0);
    for (std::size_t k = 0; k < zz.size(); ++k) {
      const long i = zz[k];
      if (mask & (1ul << k)) {
        br.grad_G_zero.push_back(i);
        br.sys.add_eq(P.G[i].gradient, 0);
        br.sys.add_ineq(-P.H[i].gradient, 0);
      } else {
        br.sys.add_eq(P.H[i].gradient, 0);
        br.sys.add_ineq(-P.G[i].gradient, 0);
      }
    }
    out.push_back(std::move(br));
  }
  return out;
}

std::vector<LinearizationBranch> critical_branches(const MpecPoint& P, const IndexSets& sets) {
  std::vector<LinearizationBranch> out = tlin_branches(P, sets);
  for (auto& br : out) br.sys.add_ineq(P.f.gradient, 0);
  return out;
}

bool licq_u(const MpecPoint& P, const IndexSets& sets, const RVector& u) {
  const DirIndexSets dir = directional_index_sets(P, sets, u);
  std::vector<RVector> rows;
  for (long i : dir.act_g) rows.push_back(P.g[i].gradient);
  for (const auto& fd : P.h) rows.push_back(fd.gradient);
  std::vector<long> supp_G = sets.zero_plus, supp_H = sets.plus_zero;
  supp_G.insert(supp_G.end(), dir.zero_plus.begin(), dir.zero_plus.end());
  supp_G.insert(supp_G.end(), dir.zero_zero.begin(), dir.zero_zero.end());
  supp_H.insert(supp_H.end(), dir.plus_zero.begin(), dir.plus_zero.end());
  supp_H.insert(supp_H.end(), dir.zero_zero.begin(), dir.zero_zero.end());
  for (long i : supp_G) rows.push_back(P.G[i].gradient);
  for (long i : supp_H) rows.push_back(P.H[i].gradient);
  return rows_independent(rows);
}

}  // namespace statcert
