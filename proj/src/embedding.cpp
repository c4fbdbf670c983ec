#include "cddembed/embedding.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "cddembed/connectivity.hpp"
#include "cddembed/error.hpp"
#include "cddembed/generators.hpp"
#include "cddembed/shared_subspace.hpp"

namespace cddembed {

std::size_t embedding_bound(std::size_t d, std::size_t r) {
  std::size_t pow4 = 1;
  for (std::size_t i = 0; i < d; ++i) pow4 *= 4;
  return 2 * r * (pow4 - 1) + 1;
}

namespace {

struct FrameOutput {
  Matrix n;  // rows: rank of the frame input, then one row per contracted element
  std::vector<std::string> labels;
  std::vector<std::string> contracted;  // contracted[t] is the unit vector on row rank + t
  std::vector<std::string> deleted;
  DepthCertificate certificate;
};

void require(bool ok, const std::string& property, const std::string& path,
             const std::string& detail = "") {
  if (!ok) {
    throw AssertionFailure(property, "frame " + path + (detail.empty() ? "" : ": ") + detail);
  }
}

class Builder {
 public:
  Builder(const EmbedOptions& options, std::vector<FrameStats>& frames)
      : options_(options), frames_(frames) {}

  FrameOutput frame(const Matrix& mat, const std::vector<std::string>& labels,
                    const DecompositionTree& t, std::size_t level, std::size_t width,
                    const std::string& path) {
    const PrimeField& f = mat.field();
    const std::size_t rho = mat.rows();
    if (t.node(t.root()).is_leaf()) {
      require(labels.size() == 1, "leaf-frame", path, "expected a single element");
      return {mat, labels, {}, {}, DepthCertificate::leaf(labels[0])};
    }

    std::unordered_map<std::string, std::size_t> col_of;
    for (std::size_t c = 0; c < labels.size(); ++c) col_of[labels[c]] = c;

    // Children blocks and their spans.
    const std::vector<std::size_t>& kids = t.node(t.root()).children;
    const std::size_t k = kids.size();
    std::vector<DecompositionTree> subtrees;
    std::vector<std::vector<std::size_t>> blocks(k);
    std::vector<Subspace> spaces;
    for (std::size_t i = 0; i < k; ++i) {
      subtrees.push_back(t.subtree(kids[i]));
      for (const std::string& e : subtrees.back().elements()) blocks[i].push_back(col_of.at(e));
      spaces.push_back(Subspace::column_space(mat.select_columns(blocks[i])));
    }

    FrameStats st;
    st.path = path;
    st.level = level;
    st.k = k;
    st.rank = rho;
    if (k <= kLambdaStarBlockGuard) {
      st.lambda = lambda_star_spaces(spaces);
      st.lambda_measured = true;
      if (options_.assertions) {
        require(st.lambda <= width, "width-growth", path,
                "lambda*=" + std::to_string(st.lambda) + " > " + std::to_string(width));
      }
    }

    const Subspace a = shared_subspace(spaces, options_.assertions).a;
    st.d_a = a.dim();
    if (st.lambda_measured) {
      require(st.d_a <= 3 * st.lambda, "dim-A-at-most-3-lambda", path);
    }
    const std::vector<Vector> a_basis = a.basis_vectors();

    // B_i: greedy over the block's own columns, so every x^i_j is an element.
    std::vector<std::vector<std::size_t>> b(k);
    for (std::size_t i = 0; i < k; ++i) {
      Subspace seen = a;
      for (std::size_t c : blocks[i]) {
        const Vector col = mat.column(c);
        if (seen.contains(col)) continue;
        b[i].push_back(c);
        seen = sum(seen, Subspace::span(f, rho, {col}));
      }
      st.d.push_back(b[i].size());
      require(b[i].size() == quotient_dim(spaces[i], a), "block-quotient-dimension", path);
    }

    // Global basis: B_A, then the independent x^i_j in order. Kept vectors
    // move to the front of each B_i.
    Subspace global = a;
    std::vector<Vector> basis_cols = a_basis;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::size_t> kept, rest;
      for (std::size_t c : b[i]) {
        const Vector col = mat.column(c);
        if (global.contains(col)) {
          rest.push_back(c);
        } else {
          kept.push_back(c);
          basis_cols.push_back(col);
          global = sum(global, Subspace::span(f, rho, {col}));
        }
      }
      st.d_kept.push_back(kept.size());
      kept.insert(kept.end(), rest.begin(), rest.end());
      b[i] = std::move(kept);
    }
    require(basis_cols.size() == rho, "global-basis", path,
            std::to_string(basis_cols.size()) + " vectors for rank " + std::to_string(rho));
    for (std::size_t i = 0; i < k; ++i) st.d_c += st.d[i] - st.d_kept[i];
    require(st.d_c <= st.d_a, "d_C-at-most-d_A", path);
    const std::size_t d_a = st.d_a;
    const std::size_t d_c = st.d_c;

    // Coordinates in which B is the leading unit vectors.
    const std::optional<Matrix> p_inv = inverse(Matrix::from_columns(f, rho, basis_cols));
    require(p_inv.has_value(), "global-basis", path, "basis matrix is singular");
    const Matrix moved = p_inv->multiply(mat);

    // Offsets into the M' coordinates: B first, then C in (i, j) order.
    std::vector<std::size_t> kept_offset(k), c_offset(k);
    for (std::size_t i = 0, ko = d_a, co = rho; i < k; ++i) {
      kept_offset[i] = ko;
      c_offset[i] = co;
      ko += st.d_kept[i];
      co += st.d[i] - st.d_kept[i];
    }
    auto mprime_row = [&](std::size_t i, std::size_t j) {
      return j < st.d_kept[i] ? kept_offset[i] + j : c_offset[i] + (j - st.d_kept[i]);
    };

    // Coefficients α (on A) and β (on B_i) of every element.
    std::vector<Vector> alpha(labels.size()), beta(labels.size());
    std::vector<std::size_t> block_of(labels.size());
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Vector> gens;
      for (std::size_t j = 0; j < d_a; ++j) gens.push_back(vec::unit(rho, j));
      for (std::size_t c : b[i]) gens.push_back(moved.column(c));
      const Matrix g = Matrix::from_columns(f, rho, gens);
      for (std::size_t c : blocks[i]) {
        std::optional<Vector> coef = solve(g, moved.column(c));
        require(coef.has_value(), "block-coordinates", path, labels[c]);
        alpha[c].assign(coef->begin(), coef->begin() + d_a);
        beta[c].assign(coef->begin() + d_a, coef->end());
        block_of[c] = i;
      }
    }

    // M' (only built when checking): elements, then a's, then z's.
    const std::size_t wide = rho + d_c;
    std::vector<std::string> a_labels, z_labels;
    std::vector<Vector> z_vectors;  // in M' coordinates
    for (std::size_t j = 0; j < d_a; ++j) {
      a_labels.push_back("a@" + path + "#" + std::to_string(j + 1));
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = st.d_kept[i]; j < st.d[i]; ++j) {
        z_labels.push_back("z@" + path + "#" + std::to_string(i + 1) + "." + std::to_string(j + 1));
        Vector z(wide, 0);
        const Vector x = moved.column(b[i][j]);
        for (std::size_t q = 0; q < rho; ++q) z[q] = f.neg(x[q]);
        z[mprime_row(i, j)] = f.add(z[mprime_row(i, j)], 1);
        z_vectors.push_back(std::move(z));
      }
    }
    auto mprime_column = [&](std::size_t c) {
      Vector v(wide, 0);
      for (std::size_t j = 0; j < d_a; ++j) v[j] = alpha[c][j];
      for (std::size_t j = 0; j < beta[c].size(); ++j) v[mprime_row(block_of[c], j)] = beta[c][j];
      return v;
    };

    // M''_i: the β coordinates of the block's elements.
    std::vector<Matrix> mpp;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Vector> cols;
      for (std::size_t c : blocks[i]) cols.push_back(beta[c]);
      mpp.push_back(Matrix::from_columns(f, st.d[i], cols));
    }

    if (options_.assertions) check_frame(mat, labels, blocks, b, mpp, a_labels, z_labels,
                                         z_vectors, mprime_column, d_a, path);

    // Children.
    std::vector<FrameOutput> sub;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::string> block_labels;
      for (std::size_t c : blocks[i]) block_labels.push_back(labels[c]);
      sub.push_back(frame(mpp[i], block_labels, subtrees[i], level + 1, 4 * width,
                          path + "." + std::to_string(i + 1)));
      st.n.push_back(sub.back().contracted.size());
    }

    // Assemble N: rows are the a block, then per child its d_i rows and n_i rows.
    std::vector<std::size_t> base(k);
    std::size_t big_r = d_a;
    for (std::size_t i = 0; i < k; ++i) {
      base[i] = big_r;
      big_r += st.d[i] + st.n[i];
    }
    st.rank_n = big_r;
    std::vector<std::size_t> to_n(wide);
    for (std::size_t j = 0; j < d_a; ++j) to_n[j] = j;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < st.d[i]; ++j) to_n[mprime_row(i, j)] = base[i] + j;
    }

    FrameOutput out{Matrix(f, big_r, 0), {}, {}, {}, {}};
    std::vector<Vector> ncols;
    for (std::size_t i = 0; i < k; ++i) {
      const FrameOutput& s = sub[i];
      const std::size_t rows_i = st.d[i] + st.n[i];
      require(s.n.rows() == rows_i, "child-rank", path);
      std::set<std::string> in_block;
      for (std::size_t c : blocks[i]) in_block.insert(labels[c]);
      for (std::size_t c = 0; c < s.labels.size(); ++c) {
        Vector v(big_r, 0);
        for (std::size_t q = 0; q < rows_i; ++q) v[base[i] + q] = s.n(q, c);
        if (in_block.contains(s.labels[c])) {
          const std::size_t orig = col_of.at(s.labels[c]);
          for (std::size_t j = 0; j < d_a; ++j) v[j] = alpha[orig][j];
        }
        ncols.push_back(std::move(v));
        out.labels.push_back(s.labels[c]);
      }
    }
    for (std::size_t j = 0; j < d_a; ++j) {
      ncols.push_back(vec::unit(big_r, j));
      out.labels.push_back(a_labels[j]);
    }
    for (std::size_t z = 0; z < z_labels.size(); ++z) {
      Vector v(big_r, 0);
      for (std::size_t q = 0; q < wide; ++q) v[to_n[q]] = z_vectors[z][q];
      ncols.push_back(std::move(v));
      out.labels.push_back(z_labels[z]);
    }
    const Matrix n_raw = Matrix::from_columns(f, big_r, ncols);
    require(rank(n_raw) == big_r, "rank-accounting", path,
            "rank N=" + std::to_string(rank(n_raw)) + " expected " + std::to_string(big_r));

    out.contracted = z_labels;
    for (const FrameOutput& s : sub) {
      out.contracted.insert(out.contracted.end(), s.contracted.begin(), s.contracted.end());
    }
    out.deleted = a_labels;
    for (const FrameOutput& s : sub) {
      out.deleted.insert(out.deleted.end(), s.deleted.begin(), s.deleted.end());
    }
    out.n = unit_form(n_raw, out.labels, out.contracted, mat, labels, path);

    // Contract the a's, delete the z's, then the children separate.
    std::vector<DepthCertificate> parts;
    for (FrameOutput& s : sub) parts.push_back(std::move(s.certificate));
    DepthCertificate cert = DepthCertificate::split(std::move(parts));
    for (std::size_t z = z_labels.size(); z-- > 0;) {
      cert = DepthCertificate::step(StepKind::kDelete, z_labels[z], std::move(cert));
    }
    for (std::size_t j = d_a; j-- > 0;) {
      cert = DepthCertificate::step(StepKind::kContract, a_labels[j], std::move(cert));
    }
    out.certificate = std::move(cert);
    frames_.push_back(std::move(st));
    return out;
  }

 private:
  template <typename ColumnFn>
  void check_frame(const Matrix& mat, const std::vector<std::string>& labels,
                   const std::vector<std::vector<std::size_t>>& blocks,
                   const std::vector<std::vector<std::size_t>>& b,
                   const std::vector<Matrix>& mpp, const std::vector<std::string>& a_labels,
                   const std::vector<std::string>& z_labels, const std::vector<Vector>& z_vectors,
                   ColumnFn mprime_column, std::size_t d_a, const std::string& path) {
    const PrimeField& f = mat.field();
    const std::size_t wide = mat.rows() + z_labels.size();
    std::vector<Vector> cols;
    std::vector<std::string> names = labels;
    for (std::size_t c = 0; c < labels.size(); ++c) cols.push_back(mprime_column(c));
    for (std::size_t j = 0; j < d_a; ++j) {
      cols.push_back(vec::unit(wide, j));
      names.push_back(a_labels[j]);
    }
    for (std::size_t z = 0; z < z_labels.size(); ++z) {
      cols.push_back(z_vectors[z]);
      names.push_back(z_labels[z]);
    }
    const RepresentedMatroid mprime(Matrix::from_columns(f, wide, cols), names);
    const RepresentedMatroid input(mat, labels);

    // M'/z \ a is M, with the same row space.
    MinorSchedule back;
    for (const std::string& z : z_labels) back.steps.push_back({StepKind::kContract, z});
    for (const std::string& a : a_labels) back.steps.push_back({StepKind::kDelete, a});
    require(same_representation(apply_schedule(mprime, back), input), "M-minor-of-M-prime",
            path);

    // M'/a \ z separates along the blocks, and block i is M''_i.
    MinorSchedule down;
    for (const std::string& a : a_labels) down.steps.push_back({StepKind::kContract, a});
    for (const std::string& z : z_labels) down.steps.push_back({StepKind::kDelete, z});
    const RepresentedMatroid mpp_all = apply_schedule(mprime, down);
    std::vector<std::size_t> block_of(labels.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      for (std::size_t c : blocks[i]) block_of[c] = i;
    }
    for (const ElementSet& comp : components(mpp_all)) {
      const std::size_t home = block_of[input.index_of(mpp_all.labels()[comp.front()])];
      for (std::size_t e : comp) {
        require(block_of[input.index_of(mpp_all.labels()[e])] == home,
                "blocks-are-unions-of-components", path);
      }
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      std::vector<std::string> names_i;
      for (std::size_t c : blocks[i]) names_i.push_back(labels[c]);
      const RepresentedMatroid mpp_i(mpp[i], names_i);
      require(same_representation(mpp_all.restrict_to(mpp_all.indices_of(names_i)), mpp_i),
              "block-is-restriction", path, "child " + std::to_string(i + 1));
      for (std::size_t j = 0; j < b[i].size(); ++j) {
        require(mpp[i].column(std::find(blocks[i].begin(), blocks[i].end(), b[i][j]) -
                              blocks[i].begin()) == vec::unit(mpp[i].rows(), j),
                "B_i-are-unit-vectors", path);
      }
      const RankTransferReport rt = check_rank_transfer(mpp_i, input, names_i, d_a, i + 1);
      require(rt.ok, "rank-sandwich", path, rt.witness);
    }
  }

  // Row transform after which every contracted element is the unit vector on
  // row rho + t and the first rho rows of the input elements are `mat`.
  Matrix unit_form(const Matrix& n, const std::vector<std::string>& n_labels,
                   const std::vector<std::string>& contracted, const Matrix& mat,
                   const std::vector<std::string>& labels, const std::string& path) {
    const PrimeField& f = n.field();
    const std::size_t big_r = n.rows();
    const std::size_t rho = mat.rows();
    const std::size_t s = contracted.size();
    require(rho + s == big_r, "rank-accounting", path);
    std::unordered_map<std::string, std::size_t> n_col;
    for (std::size_t c = 0; c < n_labels.size(); ++c) n_col[n_labels[c]] = c;

    std::vector<Vector> w;
    for (const std::string& y : contracted) w.push_back(n.column(n_col.at(y)));
    Subspace spanned = Subspace::span(f, big_r, w);
    require(spanned.dim() == s, "contracted-independent", path);
    std::vector<std::size_t> chosen;  // input columns completing the basis
    for (std::size_t c = 0; c < labels.size() && w.size() < big_r; ++c) {
      const Vector v = n.column(n_col.at(labels[c]));
      if (spanned.contains(v)) continue;
      w.push_back(v);
      chosen.push_back(c);
      spanned = sum(spanned, Subspace::span(f, big_r, {v}));
    }
    require(w.size() == big_r, "contracted-plus-input-span", path);
    // Target images: contracted -> e_{rho+t}, chosen -> their input columns.
    std::vector<Vector> target;
    for (std::size_t t = 0; t < s; ++t) target.push_back(vec::unit(big_r, rho + t));
    for (std::size_t c : chosen) {
      Vector v(big_r, 0);
      const Vector col = mat.column(c);
      std::copy(col.begin(), col.end(), v.begin());
      target.push_back(std::move(v));
    }
    const std::optional<Matrix> w_inv = inverse(Matrix::from_columns(f, big_r, w));
    require(w_inv.has_value(), "contracted-plus-input-span", path);
    const Matrix q = Matrix::from_columns(f, big_r, target).multiply(*w_inv);
    const Matrix out = q.multiply(n);
    for (std::size_t c = 0; c < labels.size(); ++c) {
      const Vector v = out.column(n_col.at(labels[c]));
      require(std::equal(v.begin(), v.begin() + rho, mat.column(c).begin()),
              "representation-compatibility", path, labels[c]);
    }
    return out;
  }

  const EmbedOptions& options_;
  std::vector<FrameStats>& frames_;
};

}  // namespace

EmbeddingResult embed(const RepresentedMatroid& m, const DecompositionTree& t, std::size_t d,
                      std::size_t r, const EmbedOptions& options) {
  const DecompositionReport rep = validate_rooted(m, t, d, r);
  if (!rep.valid || !rep.depth_ok) {
    throw DecompositionError("not a rooted (" + std::to_string(d) + "," + std::to_string(r) +
                             ")-decomposition: depth " + std::to_string(rep.measured_depth) +
                             ", max lambda* " + std::to_string(rep.max_lambda));
  }
  std::vector<FrameStats> frames;
  Builder builder(options, frames);
  FrameOutput out = builder.frame(m.matrix(), m.labels(), t, 0, r, "r");
  std::reverse(frames.begin(), frames.end());  // children were pushed first
  std::stable_sort(frames.begin(), frames.end(),
                   [](const FrameStats& x, const FrameStats& y) { return x.path < y.path; });

  EmbeddingResult res{RepresentedMatroid(std::move(out.n), out.labels), {}, {}, 0,
                      embedding_bound(d, r), std::move(frames)};
  for (const std::string& y : out.contracted) res.schedule.steps.push_back({StepKind::kContract, y});
  for (const std::string& z : out.deleted) res.schedule.steps.push_back({StepKind::kDelete, z});
  res.raw_depth = out.certificate.depth();
  res.certificate = canonicalize_certificate(res.n, out.certificate);
  if (options.assertions) {
    const std::size_t value = verify_certificate(res.n, res.certificate, DepthMode::kCdd);
    require(value <= res.raw_depth && res.raw_depth <= res.bound, "certificate-bound", "r",
            "value " + std::to_string(value) + ", raw " + std::to_string(res.raw_depth) +
                ", bound " + std::to_string(res.bound));
  }
  return res;
}

RankTransferReport check_rank_transfer(const RepresentedMatroid& mpp_i,
                                       const RepresentedMatroid& m,
                                       const std::vector<std::string>& block, std::size_t d_a,
                                       std::uint64_t seed) {
  RankTransferReport rep;
  const std::size_t n = block.size();
  auto subset = [&](std::uint64_t mask) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) out.push_back(block[i]);
    }
    return out;
  };
  auto describe = [](const std::vector<std::string>& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? " " : "") + s[i];
    return out + "}";
  };
  auto check_subset = [&](std::uint64_t mask) {
    const std::vector<std::string> x = subset(mask);
    const std::size_t rm = m.rank_of_labels(x);
    const std::size_t rp = mpp_i.rank_of_labels(x);
    ++rep.subsets_checked;
    if (rp > rm || rp + d_a < rm) {
      rep.ok = false;
      rep.witness = "X=" + describe(x) + " rank_M=" + std::to_string(rm) +
                    " rank_M''=" + std::to_string(rp) + " d_A=" + std::to_string(d_a);
    }
  };
  SplitMix64 rng(seed);
  if (n <= kRankTransferEnumCap) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n) && rep.ok; ++mask) {
      check_subset(mask);
    }
  } else {
    for (std::size_t s = 0; s < 4096 && rep.ok; ++s) {
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < n && i < 64; ++i) mask |= (rng.next() & 1) << i;
      check_subset(mask);
    }
  }
  // λ grows by at most d_A on sampled disjoint pairs.
  for (std::size_t s = 0; s < 256 && rep.ok; ++s) {
    std::vector<std::string> x, y;
    for (const std::string& e : block) {
      const std::uint64_t side = rng.below(3);
      if (side == 0) x.push_back(e);
      if (side == 1) y.push_back(e);
    }
    const ElementSet xm = m.indices_of(x), ym = m.indices_of(y);
    const ElementSet xp = mpp_i.indices_of(x), yp = mpp_i.indices_of(y);
    const std::size_t lm = lambda2(m, xm, ym), lp = lambda2(mpp_i, xp, yp);
    ++rep.pairs_checked;
    if (lp > lm + d_a) {
      rep.ok = false;
      rep.witness = "X=" + describe(x) + " Y=" + describe(y) + " lambda_M=" +
                    std::to_string(lm) + " lambda_M''=" + std::to_string(lp);
    }
  }
  return rep;
}

bool EmbeddingVerification::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.pass; });
}

namespace {

std::string describe_mask(const RepresentedMatroid& m, std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!(mask >> i & 1)) continue;
    out += (first ? "" : " ") + m.labels()[i];
    first = false;
  }
  return out + "}";
}

}  // namespace

std::optional<std::string> basis_difference(const RepresentedMatroid& a,
                                            const RepresentedMatroid& b) {
  const RepresentedMatroid bb = b.reorder(a.labels());
  if (a.rank() != bb.rank()) {
    return "rank " + std::to_string(a.rank()) + " vs " + std::to_string(bb.rank());
  }
  const BasisSetEncoding ea = basis_set(a), eb = basis_set(bb);
  std::vector<std::uint32_t> only_a, only_b;
  std::set_difference(ea.bases.begin(), ea.bases.end(), eb.bases.begin(), eb.bases.end(),
                      std::back_inserter(only_a));
  std::set_difference(eb.bases.begin(), eb.bases.end(), ea.bases.begin(), ea.bases.end(),
                      std::back_inserter(only_b));
  if (!only_a.empty()) return describe_mask(a, only_a.front()) + " is a basis only on the left";
  if (!only_b.empty()) return describe_mask(a, only_b.front()) + " is a basis only on the right";
  return std::nullopt;
}

std::optional<std::string> sampled_matroid_difference(const RepresentedMatroid& a,
                                                      const RepresentedMatroid& b,
                                                      std::size_t samples, std::uint64_t seed) {
  if (a.rank() != b.rank()) {
    return "rank " + std::to_string(a.rank()) + " vs " + std::to_string(b.rank());
  }
  SplitMix64 rng(seed);
  std::vector<std::string> pool = a.labels();
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t i = 0; i < a.rank() && i < pool.size(); ++i) {
      std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
    }
    std::vector<std::string> pick(pool.begin(), pool.begin() + std::min(a.rank(), pool.size()));
    const std::size_t ra = a.rank_of_labels(pick), rb = b.rank_of_labels(pick);
    if (ra != rb) {
      std::string set = "{";
      for (std::size_t i = 0; i < pick.size(); ++i) set += (i ? " " : "") + pick[i];
      return set + "} has rank " + std::to_string(ra) + " vs " + std::to_string(rb);
    }
  }
  return std::nullopt;
}

EmbeddingVerification verify_embedding(const RepresentedMatroid& n, const MinorSchedule& schedule,
                                       const DepthCertificate& certificate,
                                       const RepresentedMatroid& m, std::size_t d, std::size_t r,
                                       const VerifyOptions& options) {
  EmbeddingVerification out;
  std::optional<RepresentedMatroid> recovered;
  try {
    recovered = apply_schedule(n, schedule);
  } catch (const Error& e) {
    out.checks.push_back({"minor-recovery", false, e.what()});
  }
  if (recovered) {
    std::vector<std::string> got = recovered->labels(), want = m.labels();
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    if (got != want) {
      std::vector<std::string> extra, missing;
      std::set_difference(got.begin(), got.end(), want.begin(), want.end(),
                          std::back_inserter(extra));
      std::set_difference(want.begin(), want.end(), got.begin(), got.end(),
                          std::back_inserter(missing));
      std::string w = "label sets differ:";
      if (!extra.empty()) w += " extra " + extra.front();
      if (!missing.empty()) w += " missing " + missing.front();
      out.checks.push_back({"minor-recovery", false, w});
      recovered.reset();
    }
  }
  if (recovered) {
    std::optional<std::string> diff;
    if (m.size() <= options.max_enum) {
      out.recovery_exact = true;
      diff = basis_difference(*recovered, m);
    } else {
      diff = sampled_matroid_difference(*recovered, m, options.samples, options.seed);
    }
    out.checks.push_back(
        {out.recovery_exact ? "minor-recovery" : "minor-recovery-sampled", !diff,
         diff ? *diff
              : (out.recovery_exact ? "bases equal"
                                    : std::to_string(options.samples) + " random subsets agree")});
  }

  const std::size_t bound = embedding_bound(d, r);
  try {
    out.certificate_value = verify_certificate(n, certificate, DepthMode::kCdd);
    out.checks.push_back({"certificate-bound", out.certificate_value <= bound,
                          std::to_string(out.certificate_value) + " <= " + std::to_string(bound)});
  } catch (const CertificateError& e) {
    out.checks.push_back({"certificate-bound", false, e.what()});
  }

  if (recovered) {
    const Matrix got = nullspace(recovered->reorder(m.labels()).matrix());
    const Matrix want = nullspace(m.matrix());
    out.checks.push_back({"representation-nullspace", got == want,
                          got == want ? "nullspaces equal"
                                      : "nullspace dimension " + std::to_string(got.rows()) +
                                            " vs " + std::to_string(want.rows())});
  } else {
    out.checks.push_back({"representation-nullspace", false, "no recovered matroid"});
  }
  return out;
}

std::string format_frames(const std::vector<FrameStats>& frames) {
  std::ostringstream out;
  auto list = [&](const std::vector<std::size_t>& v) {
    out << '[';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
    out << ']';
  };
  for (const FrameStats& f : frames) {
    out << "frame " << f.path << " level=" << f.level << " k=" << f.k << " rank=" << f.rank;
    if (f.lambda_measured) out << " lambda*=" << f.lambda;
    out << " d_A=" << f.d_a << " d_C=" << f.d_c << " d=";
    list(f.d);
    out << " d'=";
    list(f.d_kept);
    out << " n=";
    list(f.n);
    out << " rankN=" << f.rank_n << '\n';
  }
  return out.str();
}

}  // namespace cddembed
