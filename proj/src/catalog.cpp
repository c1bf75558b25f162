#include "cpa/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cpa/error.hpp"
#include "cpa/linalg.hpp"
#include "cpa/lie_structure.hpp"

namespace cpa {

namespace {

Matrix elementary(int n, int i, int j) {
  Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = 1;
  return m;
}

Matrix cartan(int n, int i) { return elementary(n, i, i) - elementary(n, i + 1, i + 1); }

std::string root_label(int i, int j) { return "E" + std::to_string(i + 1) + std::to_string(j + 1); }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParameters, what);
}

}  // namespace

LieAlgebra from_matrix_basis(std::string name, std::vector<std::string> labels, const std::vector<Matrix>& basis) {
  const std::size_t d = basis.size();
  if (labels.size() != d) throw Error(ErrorCode::DimensionMismatch, "one label per basis matrix");
  LieAlgebra lie(std::move(name), std::move(labels));
  if (d == 0) return lie;
  const std::size_t size = basis.front().rows() * basis.front().cols();
  std::vector<Vector> cols;
  for (const auto& m : basis) cols.push_back(m.entries());
  const Matrix coords = Matrix::from_columns(cols, size);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const Matrix comm = basis[i] * basis[j] - basis[j] * basis[i];
      auto sol = solve_affine(coords, comm.entries());
      if (!sol || !sol->kernel.is_zero()) {
        throw Error(ErrorCode::BadParameters, "matrix basis is not a linearly independent subalgebra");
      }
      lie.set_bracket(i, j, sol->particular);
    }
  }
  return lie;
}

LieAlgebra abelian(int n) {
  require(n >= 1, "abelian(n) needs n >= 1");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("e" + std::to_string(i));
  return LieAlgebra("abelian(" + std::to_string(n) + ")", labels);
}

LieAlgebra heisenberg() {
  LieAlgebra h("heisenberg", {"e1", "e2", "e3"});
  h.set_bracket(0, 1, {0, 0, 1});
  return h;
}

LieAlgebra sl(int n) {
  require(n >= 1, "sl(n) needs n >= 1");
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      basis.push_back(elementary(n, i, j));
      labels.push_back(root_label(i, j));
    }
  for (int i = 0; i + 1 < n; ++i) {
    basis.push_back(cartan(n, i));
    labels.push_back("H" + std::to_string(i + 1));
  }
  return from_matrix_basis("sl(" + std::to_string(n) + ")", labels, basis);
}

LieAlgebra borel_sl(int n) {
  require(n >= 1, "borel_sl(n) needs n >= 1");
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      basis.push_back(elementary(n, i, j));
      labels.push_back(root_label(i, j));
    }
  for (int i = 0; i + 1 < n; ++i) {
    basis.push_back(cartan(n, i));
    labels.push_back("H" + std::to_string(i + 1));
  }
  return from_matrix_basis("borel_sl(" + std::to_string(n) + ")", labels, basis);
}

LieAlgebra parabolic_sl(int n, const std::vector<int>& roots) {
  require(n >= 2, "parabolic_sl(n, ...) needs n >= 2");
  require(!roots.empty() && static_cast<int>(roots.size()) < n - 1, "root subset must be nonempty and proper");
  std::vector<bool> in_levi(static_cast<std::size_t>(n), false);
  for (int r : roots) {
    require(r >= 1 && r <= n - 1, "simple root index out of range");
    require(!in_levi[static_cast<std::size_t>(r)], "repeated simple root");
    in_levi[static_cast<std::size_t>(r)] = true;
  }
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      basis.push_back(elementary(n, i, j));
      labels.push_back(root_label(i, j));
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // E_ji for the root e_i - e_j = alpha_{i+1} + ... + alpha_j (1-based).
      bool inside = true;
      for (int r = i + 1; r <= j; ++r) inside = inside && in_levi[static_cast<std::size_t>(r)];
      if (!inside) continue;
      basis.push_back(elementary(n, j, i));
      labels.push_back(root_label(j, i));
    }
  for (int i = 0; i + 1 < n; ++i) {
    basis.push_back(cartan(n, i));
    labels.push_back("H" + std::to_string(i + 1));
  }
  std::vector<int> sorted = roots;
  std::sort(sorted.begin(), sorted.end());
  CatalogKey key{Family::ParabolicSL, n, sorted};
  return from_matrix_basis(to_string(key), labels, basis);
}

LieAlgebra example_3_6() {
  const std::vector<Matrix> basis{elementary(3, 0, 1), elementary(3, 0, 2), elementary(3, 1, 0),
                                  elementary(3, 1, 2), cartan(3, 0),        cartan(3, 1)};
  return from_matrix_basis("example_3_6", {"e1", "e2", "e3", "e4", "e5", "e6"}, basis);
}

LieAlgebra sl2_semidirect_V(int n) {
  require(n >= 1, "sl2_semidirect_V(n) needs n >= 1");
  // Highest weight m = n - 1 on v_0..v_m:
  // e v_k = (m - k + 1) v_{k-1}, f v_k = (k + 1) v_{k+1}, h v_k = (m - 2k) v_k.
  const std::size_t dim = static_cast<std::size_t>(n);
  const long m = n - 1;
  Matrix e(dim, dim), f(dim, dim), h(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const long kk = static_cast<long>(k);
    if (k > 0) e(k - 1, k) = m - kk + 1;
    if (k + 1 < dim) f(k + 1, k) = kk + 1;
    h(k, k) = m - 2 * kk;
  }
  LieAlgebra out = semidirect(sl(2), {e, f, h}, dim);
  out.set_name("sl2_semidirect_V(" + std::to_string(n) + ")");
  return out;
}

BorelCenterElement borel_center_element(int k) {
  require(k >= 2, "borel_center_element needs k >= 2");
  BorelCenterElement out{borel_sl(k + 1), {}, {}};
  const auto& labels = out.algebra.labels();
  const std::size_t n = out.algebra.dim();
  const std::string z_label = root_label(0, k);
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i] == z_label) out.z = unit_vector(n, i);
    if (labels[i].front() == 'H') out.h_indices.push_back(i);
  }
  return out;
}

std::string to_string(const CatalogKey& key) {
  switch (key.family) {
    case Family::Abelian: return "abelian(" + std::to_string(key.n) + ")";
    case Family::Heisenberg: return "heisenberg";
    case Family::SL: return "sl(" + std::to_string(key.n) + ")";
    case Family::BorelSL: return "borel_sl(" + std::to_string(key.n) + ")";
    case Family::ParabolicSL: {
      std::string s = "parabolic_sl(" + std::to_string(key.n);
      for (int r : key.roots) s += "," + std::to_string(r);
      return s + ")";
    }
    case Family::Example36: return "example_3_6";
    case Family::SL2SemidirectV: return "sl2_semidirect_V(" + std::to_string(key.n) + ")";
  }
  return "?";
}

CatalogKey parse_catalog_key(const std::string& text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  const auto open = s.find('(');
  const std::string name = s.substr(0, open);
  std::vector<int> args;
  if (open != std::string::npos) {
    if (s.back() != ')') throw Error(ErrorCode::BadParameters, "unbalanced parentheses in '" + text + "'");
    std::stringstream inner(s.substr(open + 1, s.size() - open - 2));
    std::string item;
    while (std::getline(inner, item, ',')) {
      try {
        std::size_t used = 0;
        args.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw Error(ErrorCode::BadParameters, "bad integer '" + item + "' in '" + text + "'");
      }
    }
  }
  auto expect_args = [&](std::size_t count) {
    if (args.size() != count) throw Error(ErrorCode::BadParameters, "wrong parameter count in '" + text + "'");
  };
  CatalogKey key;
  if (name == "abelian") {
    expect_args(1);
    key = {Family::Abelian, args[0], {}};
  } else if (name == "heisenberg") {
    expect_args(0);
    key = {Family::Heisenberg, 0, {}};
  } else if (name == "sl") {
    expect_args(1);
    key = {Family::SL, args[0], {}};
  } else if (name == "borel_sl") {
    expect_args(1);
    key = {Family::BorelSL, args[0], {}};
  } else if (name == "parabolic_sl") {
    if (args.size() < 2) throw Error(ErrorCode::BadParameters, "parabolic_sl needs n and at least one root");
    std::vector<int> roots(args.begin() + 1, args.end());
    std::sort(roots.begin(), roots.end());
    key = {Family::ParabolicSL, args[0], roots};
  } else if (name == "example_3_6") {
    expect_args(0);
    key = {Family::Example36, 0, {}};
  } else if (name == "sl2_semidirect_V") {
    expect_args(1);
    key = {Family::SL2SemidirectV, args[0], {}};
  } else {
    throw Error(ErrorCode::BadParameters, "unknown catalog name '" + name + "'");
  }
  make(key);  // range checks
  return key;
}

std::vector<CatalogKey> catalog_examples() {
  return {{Family::Abelian, 2, {}},       {Family::Heisenberg, 0, {}},   {Family::SL, 2, {}},
          {Family::SL, 3, {}},            {Family::BorelSL, 2, {}},      {Family::BorelSL, 3, {}},
          {Family::BorelSL, 4, {}},       {Family::ParabolicSL, 3, {1}}, {Family::Example36, 0, {}},
          {Family::SL2SemidirectV, 2, {}}};
}

LieAlgebra make(const CatalogKey& key) {
  switch (key.family) {
    case Family::Abelian: return abelian(key.n);
    case Family::Heisenberg: return heisenberg();
    case Family::SL: return sl(key.n);
    case Family::BorelSL: return borel_sl(key.n);
    case Family::ParabolicSL: return parabolic_sl(key.n, key.roots);
    case Family::Example36: return example_3_6();
    case Family::SL2SemidirectV: return sl2_semidirect_V(key.n);
  }
  throw Error(ErrorCode::BadParameters, "unknown family");
}

}  // namespace cpa
