#include "grinv/predict_crosschar.hpp"

#include "grinv/errors.hpp"

#include <string>

namespace grinv {

namespace {

struct Builder {
  CaseTrace trace;

  Builder(int n, Int q, Int ell, GraphKind graph, MatrixKind matrix) {
    trace.matrix_label = std::string(to_string(graph)) + "-" + std::string(to_string(matrix));
    const Brackets b = brackets(n, q);
    trace.lemma_input.ambient_dim = b.v;
    trace.lemma_input.kernel_dim = matrix == MatrixKind::Laplacian ? 1 : 0;
    trace.lemma_input.d = group_order(n, q, graph, matrix).valuation(static_cast<std::uint64_t>(ell));
    trace.params["d"] = trace.lemma_input.d;
    trace.params["f"] = b.f;
    trace.params["g"] = b.g;
  }

  Builder &id(const std::string &suffix) {
    trace.case_id = trace.matrix_label + " " + suffix;
    return *this;
  }
  Builder &trivial() {
    trace.case_id = "trivial";
    return *this;
  }
  Builder &param(const std::string &name, Int value) {
    trace.params[name] = value;
    return *this;
  }
  Builder &step(Int exponent, Int bound) {
    trace.lemma_input.steps.push_back({exponent, bound});
    return *this;
  }
};

[[noreturn]] void unclassified(const Builder &bld, const std::string &why) {
  throw UnclassifiedCase(bld.trace.matrix_label + ": " + why);
}

// Every argument below is a nonzero bracket or eigenvalue.
int v(Int ell, Int x) { return val(ell, x); }
bool divides(Int ell, Int x) { return x % ell == 0; }

void grassmann_laplacian(Builder &bld, const Brackets &b, int n, Int q, Int ell) {
  if (!divides(ell, q + 1)) {
    if (divides(ell, b.n1) && divides(ell, b.n1m1))
      unclassified(bld, "ell divides [n 1] and [n-1 1]");
    if (divides(ell, b.n1)) {
      const int a = v(ell, b.n1);
      bld.id("ell!|q+1 (i)").param("a", a).step(a, b.f);
    } else if (divides(ell, b.n1m1)) {
      const int a = v(ell, b.n1m1);
      bld.id("ell!|q+1 (ii)").param("a", a).step(a, b.g);
    } else {
      bld.trivial();
    }
    return;
  }
  const int a = v(ell, q + 1);
  bld.param("a", a);
  if (n % 2 == 1) {
    const Int qq = qqbinom1((n - 1) / 2, q);
    if (!divides(ell, qq)) {
      bld.id("ell|q+1 n odd (i)").step(2 * a, b.g + 1);
    } else {
      const int bb = v(ell, qq);
      bld.id("ell|q+1 n odd (ii)").param("b", bb).step(2 * a, b.g + 1).step(2 * a + bb, b.g);
    }
    return;
  }
  const Int qq = qqbinom1(n / 2, q);
  if (divides(ell, qq)) {
    const int bb = v(ell, qq);
    bld.id("ell|q+1 n even (iv)").param("b", bb).step(a, b.g + 2).step(2 * a + bb, b.f);
  } else if (!divides(ell, (n - 1) / 2)) {
    bld.id("ell|q+1 n even (iii)").step(a, b.g + 2).step(2 * a, b.f);
  } else {
    bld.id("ell|q+1 n even (v)").step(a, b.g + 2).step(2 * a, b.f);
  }
}

void grassmann_adjacency(Builder &bld, const Brackets &b, int n, Int q, Int ell) {
  const SpectralData sp = spectrum(n, q, GraphKind::Grassmann, MatrixKind::Adjacency);
  if (!divides(ell, q + 1)) {
    const bool on_k = divides(ell, sp.theta0), on_r = divides(ell, sp.r);
    if (on_k && on_r)
      unclassified(bld, "ell divides k' and r");
    if (on_k) {
      const int a = v(ell, sp.theta0);
      bld.id("ell!|q+1 (i)").param("a", a).step(a, 1);
    } else if (on_r) {
      const int a = v(ell, sp.r);
      bld.id("ell!|q+1 (ii)").param("a", a).step(a, b.f);
    } else {
      bld.trivial();
    }
    return;
  }
  const int a = v(ell, q + 1);
  bld.param("a", a);
  if (n % 2 == 1) {
    if (!divides(ell, (n - 1) / 2))
      bld.id("ell|q+1 n odd a)").step(a, b.g + 1);
    else
      bld.id("ell|q+1 n odd b)").step(a, b.g + 1);
    return;
  }
  const Int h = qqbinom1((n - 2) / 2, q);
  const int bb = v(ell, q * h - 1), c = v(ell, h);
  bld.param("h", h).param("b", bb).param("c", c);
  if (bb > 0 && c > 0)
    unclassified(bld, "ell divides both qh-1 and h");
  if (bb > 0)
    bld.id("ell|q+1 n even b)").step(a, b.g + 2).step(2 * a + bb, b.f);
  else if (c > 0)
    bld.id("ell|q+1 n even c)").step(a, b.g + 2).step(2 * a, b.f).step(2 * a + c, 1);
  else
    bld.id("ell|q+1 n even a)").step(a, b.g + 2).step(2 * a, b.f);
}

void skew_laplacian(Builder &bld, const Brackets &b, int n, Int q, Int ell) {
  const SpectralData sp = spectrum(n, q, GraphKind::SkewLines, MatrixKind::Laplacian);
  const int vr = v(ell, sp.r), vs = v(ell, sp.s);
  if (!divides(ell, q + 1)) {
    if (vr > 0 && vs > 0)
      unclassified(bld, "ell divides both nonzero eigenvalues");
    if (vr > 0) {
      const bool on_n1 = divides(ell, b.n1), on_n3 = divides(ell, b.n3);
      if (on_n1 && on_n3) {
        const int a = v(ell, b.n1), bb = v(ell, b.n3);
        bld.id("ell!|q+1 (i) b)").param("a", a).param("b", bb).step(bb, b.f + 1).step(a + bb, b.f);
      } else if (on_n1) {
        const int a = v(ell, b.n1);
        bld.id("ell!|q+1 (i) a)").param("a", a).step(a, b.f);
      } else {
        const int a = v(ell, b.n3);
        bld.id("ell!|q+1 (i) c)").param("a", a).step(a, b.f + 1);
      }
    } else if (vs > 0) {
      if (!divides(ell, b.n1m1)) {
        bld.id("ell!|q+1 (ii) a)").param("a", vs).step(vs, b.g + 1);
      } else {
        const Int mu = srg_params(n, q, GraphKind::SkewLines).mu;
        const int a = v(ell, b.n1m1), bb = v(ell, mu);
        bld.param("a", a).param("b", bb);
        if (bb == 0)
          bld.id("ell!|q+1 (ii) b) b=0").step(a, b.g);
        else
          bld.id("ell!|q+1 (ii) b) b>0").step(bb, b.g + 1).step(a + bb, b.g);
      }
    } else {
      bld.trivial();
    }
    return;
  }
  bld.param("a", vr).param("b", vs);
  if (n % 2 == 0) {
    if (vr == 0 && vs == 0)
      bld.id("ell|q+1 n even, ell!|n/2");
    else if (vr > 0 && vs > 0)
      bld.id("ell|q+1 n even, ell|n/2").step(vs, b.g + 1).step(vr + vs, b.f);
    else
      unclassified(bld, "ell|q+1, n even, exactly one of r, s divisible");
    return;
  }
  if (!divides(ell, (n - 1) / 2)) {
    if (vr > 0 && vs > 0)
      unclassified(bld, "ell|q+1, n odd, both r and s divisible");
    if (vr > 0)
      bld.id("ell|q+1 n odd a) ell|r").step(vr, b.f + 1);
    else if (vs > 0)
      bld.id("ell|q+1 n odd a) ell|s").step(vs, b.g + 1);
    else
      bld.id("ell|q+1 n odd a)");
  } else {
    if (vs == 0)
      unclassified(bld, "ell|q+1, ell|(n-1)/2 but ell does not divide s");
    bld.id("ell|q+1 n odd b)").step(vs, b.g);
  }
}

void skew_adjacency(Builder &bld, const Brackets &b, int n, Int q, Int ell) {
  const Int top = qbinom(n - 2, 2, q);
  if (!divides(ell, q + 1)) {
    if (divides(ell, b.n2) && divides(ell, b.n3))
      unclassified(bld, "ell divides [n-2 1] and [n-3 1]");
    if (divides(ell, b.n2)) {
      const int a = v(ell, top);
      bld.id("ell!|q+1 (i)").param("a", a).step(a, 1);
    } else if (divides(ell, b.n3)) {
      const int a = v(ell, b.n3);
      bld.id("ell!|q+1 (ii)").param("a", a).step(a, b.f + 1);
    } else {
      bld.trivial();
    }
    return;
  }
  const int a = v(ell, q + 1);
  bld.param("a", a);
  if (n % 2 == 0) {
    if (!divides(ell, qqbinom1((n - 2) / 2, q))) {
      bld.id("ell|q+1 (i)");
    } else {
      const int aa = v(ell, top);
      bld.id("ell|q+1 (ii)").param("a", aa).step(aa, 1);
    }
    return;
  }
  const Int qq = qqbinom1((n - 3) / 2, q);
  if (!divides(ell, qq)) {
    bld.id("ell|q+1 (iii)").step(a, b.f);
  } else {
    const int bb = v(ell, b.n3 / (q + 1));
    bld.id("ell|q+1 (iv)").param("b", bb).step(bb, b.f + 1).step(a + bb, b.f);
  }
}

} // namespace

CaseTrace classify_case(int n, Int q, Int ell, GraphKind graph, MatrixKind matrix) {
  const Brackets b = brackets(n, q);
  if (ell < 2 || !is_prime(static_cast<std::uint64_t>(ell)))
    throw DomainError("ell must be prime");
  if (ell == b.p)
    throw CharacteristicClash("ell equals the characteristic; use the char-p predictor");
  Builder bld(n, q, ell, graph, matrix);
  if (graph == GraphKind::Grassmann) {
    if (matrix == MatrixKind::Laplacian)
      grassmann_laplacian(bld, b, n, q, ell);
    else
      grassmann_adjacency(bld, b, n, q, ell);
  } else {
    if (matrix == MatrixKind::Laplacian)
      skew_laplacian(bld, b, n, q, ell);
    else
      skew_adjacency(bld, b, n, q, ell);
  }
  return bld.trace;
}

std::pair<DivisorProfile, CaseTrace> predict_crosschar(int n, Int q, Int ell, GraphKind graph,
                                                       MatrixKind matrix) {
  CaseTrace trace = classify_case(n, q, ell, graph, matrix);
  DivisorProfile profile = resolve_multiplicities(trace.lemma_input, static_cast<std::uint64_t>(ell));
  return {std::move(profile), std::move(trace)};
}

} // namespace grinv
