#include "k3lat/named_lattices.hpp"

#include "k3lat/errors.hpp"

namespace k3lat {

int omega_half(int g) { return (g + 1) / 2; }

void validate(const OmegaParams& params) {
  if (params.g < 5) raise(ErrorKind::RangeError, "genus " + std::to_string(params.g) + " below 5");
  const int half = omega_half(params.g);
  for (int di : params.d)
    if (di < 1 || di >= half)
      raise(ErrorKind::RangeError, "d_i = " + std::to_string(di) + " outside [1, " + std::to_string(half - 1) + "]");
}

LatticePtr build_omega(const OmegaParams& params) {
  validate(params);
  IntMatrix g(10, 10);
  g(0, 0) = 2 * params.g - 2;
  g(0, 1) = g(1, 0) = omega_half(params.g);
  for (int i = 0; i < 8; ++i) {
    g(2 + i, 2 + i) = -2;
    g(0, 2 + i) = g(2 + i, 0) = params.d[i];
  }
  return GramLattice::make(std::move(g), {"L", "E", "G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8"});
}

namespace {

IntMatrix plane_plus_roots(int roots, int first_square) {
  if (roots < 0) raise(ErrorKind::RangeError, "negative root count");
  const std::size_t n = static_cast<std::size_t>(roots) + 2;
  IntMatrix g(n, n);
  g(0, 0) = first_square;
  g(0, 1) = g(1, 0) = 1;
  for (std::size_t i = 2; i < n; ++i) g(i, i) = -2;
  return g;
}

std::vector<std::string> plane_labels(const char* first, int roots) {
  std::vector<std::string> labels{first, "f"};
  for (int i = 1; i <= roots; ++i) labels.push_back("r" + std::to_string(i));
  return labels;
}

RationalMatrix omega_basis(const OmegaParams& params, int shift) {
  validate(params);
  const Rational fibre_scale(1, omega_half(params.g));
  RationalMatrix m(10, 10);
  // Column 0: L - shift * F, column 1: F, column 2+i: Gi - d_i F.
  m(0, 0) = 1;
  m(1, 0) = -Rational(shift) * fibre_scale;
  m(1, 1) = fibre_scale;
  for (int i = 0; i < 8; ++i) {
    m(2 + i, 2 + i) = 1;
    m(1, 2 + i) = -Rational(params.d[i]) * fibre_scale;
  }
  return m;
}

}  // namespace

LatticePtr build_section_fibre_lattice(int roots) {
  return GramLattice::make(plane_plus_roots(roots, -2), plane_labels("s", roots));
}

LatticePtr build_hyperbolic_plus_roots(int roots) {
  return GramLattice::make(plane_plus_roots(roots, 0), plane_labels("e", roots));
}

RationalMatrix omega_section_fibre_basis(const OmegaParams& params) { return omega_basis(params, params.g); }

RationalMatrix omega_hyperbolic_basis(const OmegaParams& params) { return omega_basis(params, params.g - 1); }

IntMatrix section_fibre_to_hyperbolic(int roots) {
  IntMatrix m = IntMatrix::identity(static_cast<std::size_t>(roots) + 2);
  m(1, 0) = 1;
  return m;
}

PData p_data(int p, int h) {
  if (!(p > h && h >= 8)) raise(ErrorKind::RangeError, "P lattice needs p > h >= 8");
  PData out;
  out.p = p;
  out.h = h;
  out.half = omega_half(h);
  out.l = (p - h) / out.half;
  out.m = (p - h) % out.half;
  const bool edge = out.m == 0 || out.m == out.half - 1;
  out.s1 = edge ? p - h - 1 : p - h + 1;
  return out;
}

LatticePtr build_P(int p, int h) {
  const PData data = p_data(p, h);
  IntMatrix g{{Integer(2 * h - 2), Integer(data.s1), Integer(3)},
              {Integer(data.s1), Integer(-2), Integer(0)},
              {Integer(3), Integer(0), Integer(-2)}};
  return GramLattice::make(std::move(g), {"M", "R1", "R2"});
}

PEmbedding p_embedding(int p, int h) {
  PEmbedding out;
  out.data = p_data(p, h);
  const auto& dt = out.data;
  int d1 = 0;
  int e_coeff = 0;  // coefficient of E in the image of R1
  if (dt.m == 0) {
    d1 = dt.half - 1;
    e_coeff = dt.l - 1;
  } else if (dt.m < dt.half - 1) {
    d1 = dt.m + 1;
    e_coeff = dt.l;
  } else {
    d1 = dt.half - 2;
    e_coeff = dt.l;
  }
  out.omega.g = h;
  out.omega.d = {d1, 3, 1, 1, 1, 1, 1, 1};
  validate(out.omega);
  out.map = IntMatrix(10, 3);
  out.map(0, 0) = 1;        // M -> L
  out.map(1, 1) = e_coeff;  // R1 -> e_coeff E + G1
  out.map(2, 1) = 1;
  out.map(3, 2) = 1;  // R2 -> G2
  return out;
}

LatticePtr build_Lambda(int a) {
  IntMatrix g{{Integer(2 * a - 2), Integer(6), Integer(1)}, {Integer(6), Integer(0), Integer(0)},
              {Integer(1), Integer(0), Integer(-2)}};
  return GramLattice::make(std::move(g), {"D", "F", "G"});
}

std::vector<LambdaSolution> lambda_solutions(int a) {
  std::vector<LambdaSolution> out;
  for (int eps = 0; eps <= 1; ++eps)
    for (int d1 = 3; d1 <= 5; ++d1)
      for (int d2 = 3; d2 <= 5; ++d2) {
        // (L + G1 + eps G2)^2 = 20 + 2 d1 - 2 + eps (2 d2 - 2)
        const int square = 18 + 2 * d1 + eps * (2 * d2 - 2);
        if (square != 2 * a - 2) continue;
        LambdaSolution s;
        s.d1 = d1;
        s.d2 = d2;
        s.eps = eps;
        s.omega.g = 11;
        s.omega.d = {d1, d2, 1, 1, 1, 1, 1, 1};
        s.map = IntMatrix(10, 3);
        s.map(0, 0) = 1;  // D -> L + G1 + eps G2
        s.map(2, 0) = 1;
        s.map(3, 0) = eps;
        s.map(1, 1) = 1;  // F -> E
        s.map(9, 2) = 1;  // G -> G8
        out.push_back(std::move(s));
      }
  return out;
}

LatticePtr build_Lambda_bar(int a) {
  const int y = a - 14;
  IntMatrix g{{Integer(2 * y - 2), Integer(6), Integer(3)}, {Integer(6), Integer(0), Integer(0)},
              {Integer(3), Integer(0), Integer(-2)}};
  return GramLattice::make(std::move(g), {"X", "Y", "Z"});
}

IntMatrix lambda_to_lambda_bar() {
  return IntMatrix{{Integer(1), Integer(0), Integer(0)}, {Integer(-2), Integer(1), Integer(0)},
                   {Integer(-1), Integer(0), Integer(1)}};
}

LatticePtr build_K(int d) {
  if (d < 1 || d > 5) raise(ErrorKind::RangeError, "K lattice needs 1 <= d <= 5");
  IntMatrix g{{Integer(-2), Integer(6), Integer(3), Integer(2), Integer(d)},
              {Integer(6), Integer(0), Integer(0), Integer(0), Integer(0)},
              {Integer(3), Integer(0), Integer(-2), Integer(0), Integer(0)},
              {Integer(2), Integer(0), Integer(0), Integer(-2), Integer(0)},
              {Integer(d), Integer(0), Integer(0), Integer(0), Integer(-2)}};
  return GramLattice::make(std::move(g), {"A", "B", "G1", "G2", "G3"});
}

std::vector<KEmbedding> lambda_bar_embeddings(int a) {
  if (a < 14 || a > 19) raise(ErrorKind::RangeError, "embeddings into K_d exist for 14 <= a <= 19");
  std::vector<KEmbedding> out;
  auto make = [](int d, int eps1, int eps2) {
    KEmbedding e;
    e.d = d;
    e.eps1 = eps1;
    e.eps2 = eps2;
    e.map = IntMatrix(5, 3);
    e.map(0, 0) = 1;  // X -> A + eps1 G3 + eps2 G2
    e.map(4, 0) = eps1;
    e.map(3, 0) = eps2;
    e.map(1, 1) = 1;  // Y -> B
    e.map(2, 2) = 1;  // Z -> G1
    return e;
  };
  if (a == 14) {
    for (int d = 1; d <= 5; ++d) out.push_back(make(d, 0, 0));
  } else if (a < 19) {
    out.push_back(make(a - 14 + 1, 1, 0));
  } else {
    out.push_back(make(5, 1, 1));
  }
  return out;
}

DivisorClass omega_reference(const LatticePtr& omega) { return DivisorClass::basis(omega, "L"); }
DivisorClass p_reference(const LatticePtr& p) { return DivisorClass::basis(p, "M"); }
DivisorClass lambda_reference(const LatticePtr& lam) { return DivisorClass::basis(lam, "D"); }

DivisorClass k_reference(const LatticePtr& k) {
  // A + B has no orthogonal root and pairs positively with A, B and every Gi.
  return DivisorClass::basis(k, "A") + DivisorClass::basis(k, "B");
}

}  // namespace k3lat
