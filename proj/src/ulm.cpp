#include "ulmkit/ulm.hpp"

#include <string>
#include <utility>

#include "ulmkit/error.hpp"

namespace ulmkit::ulm {

std::vector<std::size_t> ulm_invariants(const ZModule& m) {
  const std::size_t d = m.dim();
  const Subspace fixed = fixed_part(m);
  // a[n] = dim(I^n M cap M^Z); a[d] = 0.
  std::vector<std::size_t> a(d + 1, 0);
  FpMatrix power = FpMatrix::identity(m.ell(), d);
  for (std::size_t n = 0; n < d; ++n) {
    a[n] = Subspace::column_space(power).intersect(fixed).dim();
    power = power * m.nilpotent();
  }
  std::vector<std::size_t> u(d);
  for (std::size_t n = 0; n < d; ++n) u[n] = a[n] - a[n + 1];
  return u;
}

JordanType jordan_multiplicities(const ZModule& m) {
  const std::size_t d = m.dim();
  std::vector<std::size_t> r(d + 2, 0);
  FpMatrix power = FpMatrix::identity(m.ell(), d);
  for (std::size_t k = 0; k <= d; ++k) {
    r[k] = linalg::rank(power);
    power = power * m.nilpotent();
  }
  JordanType out;
  for (std::size_t n = 1; n <= d; ++n) {
    std::size_t mult = r[n - 1] + r[n + 1] - 2 * r[n];
    if (mult) out[n] = mult;
  }
  return out;
}

JordanType jordan_type_of(const std::vector<std::size_t>& block_sizes) {
  JordanType out;
  for (auto s : block_sizes)
    if (s) ++out[s];
  return out;
}

JordanType Decomposition::type() const { return jordan_type_of(block_sizes()); }

std::vector<std::size_t> Decomposition::block_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(parts.size());
  for (const auto& c : parts) sizes.push_back(c.size);
  return sizes;
}

FpMatrix Decomposition::chain_basis() const {
  std::vector<Vec> cols;
  for (const auto& c : parts) cols.insert(cols.end(), c.vectors.begin(), c.vectors.end());
  return FpMatrix::from_columns(change_of_basis.ell(), change_of_basis.rows(), cols);
}

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw InternalError("decompose: " + what);
}

// Matrix of x restricted to the invariant subspace q, in q's basis.
FpMatrix restricted_action(const FpMatrix& x, const Subspace& q) {
  FpMatrix out(x.ell(), q.dim(), q.dim());
  std::size_t c = 0;
  for (const auto& v : q.basis()) {
    auto coords = q.coordinates(x * v);
    if (!coords) fail("complement is not sigma-invariant");
    for (std::size_t r = 0; r < q.dim(); ++r) out.set(r, c, (*coords)[r]);
    ++c;
  }
  return out;
}

}  // namespace

Decomposition decompose(const ZModule& m) {
  const Scalar ell = m.ell();
  const std::size_t d = m.dim();
  const FpMatrix& x = m.nilpotent();
  const Subspace fixed = fixed_part(m);

  Decomposition out{{}, FpMatrix(ell, d, d), {}};
  Subspace q = Subspace::whole(ell, d);

  // x restricted to Q and its powers x^N, x^{N+1}, x^{N+2}; rebuilt only
  // when Q shrinks.
  FpMatrix basis_q(ell, d, 0), xq(ell, 0, 0), pow_n(ell, 0, 0), pow_n1(ell, 0, 0),
      pow_n2(ell, 0, 0);
  std::size_t rank_n = 0, rank_n1 = 0, rank_n2 = 0;
  bool q_changed = true;
  for (std::size_t stage = 0; !q.is_zero(); ++stage) {
    if (stage >= d) fail("no progress after dim M stages");
    if (q_changed) {
      basis_q = q.basis_matrix();
      xq = restricted_action(x, q);
      pow_n = xq.pow(stage);
      pow_n1 = pow_n * xq;
      pow_n2 = pow_n1 * xq;
      rank_n = linalg::rank(pow_n);
      rank_n1 = linalg::rank(pow_n1);
      q_changed = false;
    } else {
      pow_n = std::move(pow_n1);
      pow_n1 = std::move(pow_n2);
      pow_n2 = pow_n1 * xq;
      rank_n = rank_n1;
      rank_n1 = rank_n2;
    }
    rank_n2 = linalg::rank(pow_n2);
    const std::size_t qd = q.dim();
    // Blocks of size N+1 in Q; skip the subspace work when there are none.
    if (rank_n + rank_n2 == 2 * rank_n1) continue;

    // x^N restricted to Q, in ambient coordinates on the left.
    const FpMatrix xn_q = basis_q * pow_n;
    const Subspace q_fixed = fixed.intersect(q);
    const Subspace high = Subspace::column_space(basis_q * pow_n1).intersect(q_fixed);
    if (!Subspace::column_space(xn_q).contains(q_fixed))
      fail("complement has a fixed element of height below the stage");

    // U: extend a basis of the high part inside Q^Z in fixed pivot order.
    std::vector<Vec> tops;
    Subspace covered = high;
    for (const auto& v : q_fixed.basis()) {
      if (covered.contains(v)) continue;
      tops.push_back(v);
      covered = covered + Subspace::span(ell, d, {v});
    }
    if (tops.empty()) continue;

    // Lift u_j to p_j in Q and form chains of length N+1.
    std::vector<Chain> chains;
    std::vector<Vec> t_vectors;
    std::vector<Vec> t_coords;  // chain vectors in Q coordinates
    for (const auto& u : tops) {
      auto c = linalg::solve(xn_q, u);
      if (!c) fail("element of U has no preimage under x^N");
      Chain chain{stage + 1, {}};
      Vec coords = *c;
      for (std::size_t i = 0; i <= stage; ++i) {
        chain.vectors.push_back(basis_q * coords);
        t_coords.push_back(coords);
        coords = xq * coords;
      }
      if (!linalg::is_zero(coords)) fail("chain does not terminate at x^{N+1}");
      t_vectors.insert(t_vectors.end(), chain.vectors.begin(), chain.vectors.end());
      chains.push_back(std::move(chain));
    }
    const Subspace t = Subspace::span(ell, d, t_vectors);
    if (t.dim() != t_vectors.size()) fail("chains are linearly dependent");

    // Retraction Q -> T: for chain j a functional h_j on Q with
    // h_j x^{N+1} = 0 and h_j(x^b p_k) = [j = k][b = N]. The map
    // q -> sum_b h_j(x^{N-b} q) x^b p_j is then a module retraction, and
    // its kernel is a sigma-invariant complement of T.
    const std::size_t block = stage + 1;
    const FpMatrix& top_power = pow_n1;
    FpMatrix system(ell, qd + t_coords.size(), qd);
    for (std::size_t r = 0; r < qd; ++r)
      for (std::size_t c = 0; c < qd; ++c) system.set(r, c, top_power(c, r));
    for (std::size_t i = 0; i < t_coords.size(); ++i)
      for (std::size_t c = 0; c < qd; ++c) system.set(qd + i, c, t_coords[i][c]);

    std::vector<Vec> functionals;
    for (std::size_t j = 0; j < chains.size(); ++j) {
      Vec rhs(qd + t_coords.size(), 0);
      rhs[qd + j * block + stage] = 1;
      auto h = linalg::solve(system, rhs);
      if (!h) fail("no module retraction onto the stage summand (T not pure)");
      functionals.push_back(std::move(*h));
    }

    // C = {c : h_j x^b c = 0 for all j, b <= N}, in Q coordinates.
    FpMatrix annihilators(ell, functionals.size() * block, qd);
    std::size_t row = 0;
    for (const auto& h : functionals) {
      Vec f = h;
      for (std::size_t b = 0; b < block; ++b) {
        for (std::size_t c = 0; c < qd; ++c) annihilators.set(row, c, f[c]);
        ++row;
        f = linalg::left_multiply(f, xq);
      }
    }
    std::vector<Vec> complement;
    for (const auto& c : linalg::kernel_basis(annihilators))
      complement.push_back(basis_q * c);
    const Subspace next = Subspace::span(ell, d, complement);

    if (!(t + next == q) || !t.intersect(next).is_zero())
      fail("complement does not split Q");
    if (!next.contains(next.image(x))) fail("complement is not sigma-invariant");

    for (auto& c : chains) out.parts.push_back(std::move(c));
    out.stage_summands.push_back(t);
    q = next;
    q_changed = true;
  }

  FpMatrix chain_matrix = out.chain_basis();
  auto inv = linalg::inverse(chain_matrix);
  if (!inv) fail("chains do not form a basis");
  out.change_of_basis = std::move(*inv);
  if (!(out.change_of_basis * m.sigma() * chain_matrix ==
        unipotent_jordan_matrix(ell, out.block_sizes())))
    fail("change of basis does not produce the Jordan form");
  return out;
}

bool is_pure(const ZModule& m, const Subspace& e) {
  if (e.ambient() != m.dim() || e.ell() != m.ell())
    throw DomainError("subspace does not live in the module");
  if (!e.contains(e.image(m.sigma())))
    throw DomainError("subspace is not sigma-invariant");
  FpMatrix power = FpMatrix::identity(m.ell(), m.dim());
  for (std::size_t k = 1; k <= m.dim(); ++k) {
    power = power * m.nilpotent();
    const std::size_t inner = e.image(power).dim();
    const std::size_t outer = Subspace::column_space(power).intersect(e).dim();
    if (inner != outer) return false;
  }
  return true;
}

}  // namespace ulmkit::ulm
