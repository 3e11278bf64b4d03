#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "torsionlab/sections/function_spec.hpp"
#include "torsionlab/sections/matrix_function.hpp"
#include "torsionlab/sections/operator_section.hpp"
#include "torsionlab/symbols/fourier_symbol.hpp"

namespace torsionlab::sections {

// T_symbol plus a finite matrix added in the leading corner.
struct Operand {
  symbols::FourierSymbol symbol;
  Matrix corner;
  std::string label = "T";

  Matrix section(int M) const;
  int bandwidth() const;
};

// One factor of an operator word: f(operand) or its inverse. Inverses are
// inverses of the padded section, never sections of the inverse symbol.
struct Factor {
  Operand operand;
  std::optional<FunctionSpec> function;
  std::optional<MatrixFunctionMode> mode;
  bool inverse = false;

  static Factor toeplitz(const symbols::FourierSymbol& s, std::string label = "T");
  Factor inverted() const;
  Factor with_function(const FunctionSpec& f,
                       std::optional<MatrixFunctionMode> m = std::nullopt) const;

  std::string label() const;
  // True when the padded corner is exact once the pad covers the bandwidth.
  bool exact_banded() const;
  int bandwidth() const;
  // The factor at dimension M. Throws NumericalError naming the factor when
  // an inverted section is singular.
  Matrix evaluate(int M) const;
};

// Linear combination of products of factors drawn from a shared table, so
// commutators evaluate each factor once.
class OperatorWord {
 public:
  struct Term {
    cplx coeff = 1.0;
    std::vector<int> sequence;  // indices into factors(), applied left to right
  };

  OperatorWord();  // identity
  static OperatorWord identity() { return {}; }
  static OperatorWord of(const Factor& f);
  static OperatorWord product(const std::vector<Factor>& fs);

  OperatorWord operator*(const OperatorWord& o) const;
  OperatorWord operator+(const OperatorWord& o) const;
  OperatorWord operator-(const OperatorWord& o) const;
  OperatorWord operator*(cplx s) const;

  const std::vector<std::shared_ptr<const Factor>>& factors() const { return factors_; }
  const std::vector<Term>& terms() const { return terms_; }

  int total_bandwidth() const;  // max over terms of the summed factor bandwidths
  bool exact_banded() const;
  // 4 x total bandwidth for exact banded words; max(N, 8) once inverses or
  // non-polynomial functions appear.
  int default_pad(int N) const;
  std::string describe() const;

  Matrix evaluate(int M) const;

 private:
  int index_of(const std::shared_ptr<const Factor>& f);
  std::vector<std::shared_ptr<const Factor>> factors_;
  std::vector<Term> terms_;
};

OperatorWord commutator(const OperatorWord& a, const OperatorWord& b);

// Evaluates the word at N + pad and returns the leading N x N corner.
OperatorSection compose_padded(const OperatorWord& w, int N, std::optional<int> pad = std::nullopt);

}  // namespace torsionlab::sections
