#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "semihyp/algebra.hpp"
#include "semihyp/series.hpp"

namespace semihyp {

/// The coefficient field: Q itself or an imaginary quadratic extension
/// Q(sqrt(-d)) with d a positive square-free integer.
struct FieldSpec {
  enum class Kind { Rationals, QuadraticImaginary };
  Kind kind = Kind::Rationals;
  long d = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec quadratic_imaginary(long d);  // throws InvalidDError
};

enum class Regime {
  NilpotentFreeSemisimple,
  SemisimpleWithNilpotents,
  NonSemisimple,
  NotHyperbolic
};

enum class CertTag {
  Higman,
  Type2Cyclic,
  ExceptionalGroup,
  ExceptionalRees,
  NullFactor,
  QuadraticH,  // the designated extra factor of the quadratic-field table
  Other        // outside every permitted class; forces NotHyperbolic
};

std::string to_string(Regime r);
std::string to_string(CertTag t);

struct CertifiedFactor {
  std::size_t ideal_size;  // |S_i| at this step of the series
  CertTag tag;
  std::string detail;      // recognized group name, "M"/"M1", or a reason
  FactorTag structure;
};

struct OracleReport {
  std::size_t radical_dim = 0;
  bool j_squared_zero = true;
  bool unital = false;
};

/// The decision outcome: a labeled principal series as certificate, a
/// violation witness when not hyperbolic, and the algebra-level oracle
/// readings the verdict was cross-checked against.
struct Verdict {
  bool hyperbolic = false;
  Regime regime = Regime::NotHyperbolic;
  std::vector<CertifiedFactor> certificate;
  std::vector<std::size_t> violation;  // offending certificate indices
  OracleReport oracle;
  bool units_finite = false;
  PrincipalSeries series;
};

/// Hyperbolicity of QS. Requires Q_0 S^theta (equivalently QS) to be
/// unital; refuses otherwise with NonUnitalError. The verdict is always
/// cross-checked against the trace-form radical; disagreement raises
/// InternalInconsistencyError.
Verdict classify_q(const FiniteSemigroup& s);

/// Hyperbolicity of Q(sqrt(-d))S per the quadratic-field table. Every
/// table row is read as a complete description of the allowed factor
/// multiset.
Verdict classify_quadratic(const FiniteSemigroup& s, long d);

enum class BlockTag { T2, T2hat, T2prime, NoBlock };

std::string to_string(BlockTag t);

/// Which basic block the unique nilpotent generates, with the witnessing
/// idempotents. The witnessed sub-table is verified entry-for-entry
/// against the corresponding fixture.
struct BlockType {
  BlockTag tag = BlockTag::NoBlock;
  std::optional<std::size_t> e1, eN, e3, j0;
};

/// Requires classify_q(s) to land in the NonSemisimple regime with the
/// radical spanned by a nilpotent of S itself.
BlockType block_structure(const FiniteSemigroup& s);

}  // namespace semihyp
