#include "torsionlab/sections/word.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "torsionlab/errors.hpp"
#include "torsionlab/sections/toeplitz.hpp"

namespace torsionlab::sections {

Matrix Operand::section(int M) const {
  Matrix T = toeplitz_matrix(symbol, M);
  const int r = std::min<int>(M, static_cast<int>(corner.rows()));
  const int c = std::min<int>(M, static_cast<int>(corner.cols()));
  if (r > 0 && c > 0) T.topLeftCorner(r, c) += corner.topLeftCorner(r, c);
  return T;
}

int Operand::bandwidth() const {
  return std::max<int>(symbol.bandwidth(), static_cast<int>(std::max(corner.rows(), corner.cols())));
}

Factor Factor::toeplitz(const symbols::FourierSymbol& s, std::string label) {
  Factor f;
  f.operand.symbol = s;
  f.operand.label = std::move(label);
  return f;
}

Factor Factor::inverted() const {
  Factor f = *this;
  f.inverse = !inverse;
  return f;
}

Factor Factor::with_function(const FunctionSpec& fn, std::optional<MatrixFunctionMode> m) const {
  Factor f = *this;
  f.function = fn;
  f.mode = m;
  return f;
}

std::string Factor::label() const {
  std::string s = function ? function->name() + "(" + operand.label + ")" : operand.label;
  return inverse ? s + "^-1" : s;
}

bool Factor::exact_banded() const {
  return !inverse && (!function || function->is_polynomial());
}

int Factor::bandwidth() const {
  const int bw = operand.bandwidth();
  if (function && function->is_polynomial()) return std::max(0, *function->degree()) * bw;
  return bw;
}

Matrix Factor::evaluate(int M) const {
  Matrix X = operand.section(M);
  if (function) {
    const MatrixFunctionMode m = mode.value_or(default_mode(X, *function));
    X = matrix_function(X, *function, m);
  }
  if (!inverse || M == 0) return X;
  Eigen::PartialPivLU<Matrix> lu(X);
  if (!(lu.rcond() > 1e-14)) {
    throw NumericalError("singular padded section of factor " + label() + " at dimension " +
                         std::to_string(M));
  }
  return lu.inverse();
}

OperatorWord::OperatorWord() { terms_.push_back({1.0, {}}); }

OperatorWord OperatorWord::of(const Factor& f) { return product({f}); }

OperatorWord OperatorWord::product(const std::vector<Factor>& fs) {
  OperatorWord w;
  for (const auto& f : fs) {
    w.factors_.push_back(std::make_shared<const Factor>(f));
    w.terms_[0].sequence.push_back(static_cast<int>(w.factors_.size()) - 1);
  }
  return w;
}

int OperatorWord::index_of(const std::shared_ptr<const Factor>& f) {
  auto it = std::find(factors_.begin(), factors_.end(), f);
  if (it != factors_.end()) return static_cast<int>(it - factors_.begin());
  factors_.push_back(f);
  return static_cast<int>(factors_.size()) - 1;
}

OperatorWord OperatorWord::operator*(const OperatorWord& o) const {
  OperatorWord out = *this;
  out.terms_.clear();
  std::vector<int> remap;
  for (const auto& f : o.factors_) remap.push_back(out.index_of(f));
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Term t{a.coeff * b.coeff, a.sequence};
      for (int k : b.sequence) t.sequence.push_back(remap[k]);
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

OperatorWord OperatorWord::operator+(const OperatorWord& o) const {
  OperatorWord out = *this;
  for (const auto& b : o.terms_) {
    Term t{b.coeff, {}};
    for (int k : b.sequence) t.sequence.push_back(out.index_of(o.factors_[k]));
    out.terms_.push_back(std::move(t));
  }
  return out;
}

OperatorWord OperatorWord::operator*(cplx s) const {
  OperatorWord out = *this;
  for (auto& t : out.terms_) t.coeff *= s;
  return out;
}

OperatorWord OperatorWord::operator-(const OperatorWord& o) const { return *this + o * cplx(-1.0); }

OperatorWord commutator(const OperatorWord& a, const OperatorWord& b) { return a * b - b * a; }

int OperatorWord::total_bandwidth() const {
  int best = 0;
  for (const auto& t : terms_) {
    int sum = 0;
    for (int k : t.sequence) sum += factors_[k]->bandwidth();
    best = std::max(best, sum);
  }
  return best;
}

bool OperatorWord::exact_banded() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const auto& f) { return f->exact_banded(); });
}

int OperatorWord::default_pad(int N) const {
  if (exact_banded()) return std::max(1, 4 * total_bandwidth());
  return std::max(N, 8);
}

std::string OperatorWord::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (i) os << " + ";
    if (t.coeff != cplx(1.0)) os << "(" << t.coeff.real() << (t.coeff.imag() < 0 ? "" : "+") << t.coeff.imag() << "i)";
    if (t.sequence.empty()) os << "I";
    for (std::size_t j = 0; j < t.sequence.size(); ++j) os << (j ? " " : "") << factors_[t.sequence[j]]->label();
  }
  return os.str();
}

Matrix OperatorWord::evaluate(int M) const {
  std::vector<Matrix> mats;
  mats.reserve(factors_.size());
  for (const auto& f : factors_) mats.push_back(f->evaluate(M));
  Matrix sum = Matrix::Zero(M, M);
  for (const auto& t : terms_) {
    if (t.sequence.empty()) {
      sum.diagonal().array() += t.coeff;
      continue;
    }
    Matrix prod = mats[t.sequence[0]];
    for (std::size_t j = 1; j < t.sequence.size(); ++j) prod = prod * mats[t.sequence[j]];
    sum += t.coeff * prod;
  }
  return sum;
}

OperatorSection compose_padded(const OperatorWord& w, int N, std::optional<int> pad) {
  const int p = pad.value_or(w.default_pad(N));
  if (p < 0) throw std::invalid_argument("negative pad");
  Matrix full = w.evaluate(N + p);
  return {full.topLeftCorner(N, N), p, w.describe()};
}

}  // namespace torsionlab::sections
