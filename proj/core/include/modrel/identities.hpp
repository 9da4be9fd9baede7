#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "modrel/types.hpp"

namespace modrel::identities {

// One free parameter per identity; exactly one alternative applies.
struct NoParam {};
struct AlphaParam {
  double alpha;
};
struct ZParam {
  cplx z;
};
struct FreqParam {
  double n;
};
struct ScaleParam {
  double a;
};
struct PointParam {
  double t;
};
struct PairParam {
  double mu;
  double nu;
};
using IdentityParams = std::variant<NoParam, AlphaParam, ZParam, FreqParam,
                                    ScaleParam, PointParam, PairParam>;

enum class ParamKind { None, Alpha, Z, Freq, Scale, Point, Pair };

std::string describe(const IdentityParams& p);

struct IdentityDescriptor {
  std::string id;
  int side_count;
  ParamKind kind;
  std::string param_domain;
  double default_tol;
  std::string anchor;  // the identity being checked, in ASCII
  std::vector<IdentityParams> canonical;
  std::function<void(const IdentityParams&)> validate;
  std::function<Approximation(int, const IdentityParams&, const EvalConfig&)>
      side;
};

struct IdentityReport {
  std::string id;
  IdentityParams params;
  std::vector<Approximation> side_values;
  double max_abs_diff = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string diagnostics;
  double seconds = 0.0;
};

const std::vector<IdentityDescriptor>& catalog();

// Throws std::invalid_argument for an unknown id.
const IdentityDescriptor& find(const std::string& id);

Approximation eval_side(const std::string& id, int side_index,
                        const IdentityParams& params,
                        const EvalConfig& cfg = {});

// Evaluates every side, fills max_abs_diff and pass.  Domain mismatches
// throw; numerical failures inside a side are captured as pass=false with
// diagnostics.
IdentityReport check(const std::string& id, const IdentityParams& params,
                     std::optional<double> tol_override = {},
                     const EvalConfig& cfg = {});

std::vector<IdentityReport> sweep(const std::string& id,
                                  const std::vector<IdentityParams>& grid,
                                  const EvalConfig& cfg = {});

// Serialization.  JSON object keys and CSV columns are fixed:
//   {id, params, sides:[{value, err}], max_abs_diff, tol, pass, seconds}
//   id,param,lhs,mid,rhs,max_abs_diff,tol,pass,terms,nodes,seconds
std::string to_json(const IdentityReport& r);
std::string csv_header();
std::string to_csv_row(const IdentityReport& r);
std::string to_text(const IdentityReport& r);

}  // namespace modrel::identities
