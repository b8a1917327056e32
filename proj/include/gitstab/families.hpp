#pragma once

// The three model families: thin quiver representations, linear control
// pairs (A, B) under conjugation, and star-DAG sample matrices under the
// right action of GL_k x C^*. Each family provides exact stability checking,
// one-parameter-subgroup weight bookkeeping and destabilizing-class
// enumeration.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gitstab/group.hpp"
#include "gitstab/matrix.hpp"

namespace gitstab {

enum class Family { Quiver, Control, Dag };
std::string_view to_string(Family f);

struct Arrow {
  std::size_t source;  // 0-indexed
  std::size_t target;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class QuiverSpec {
 public:
  /// Throws ValidationError unless theta is admissible (sum theta_i v_i == 0)
  /// and every arrow endpoint is a valid vertex.
  QuiverSpec(std::size_t vertex_count, std::vector<Arrow> arrows, std::vector<std::size_t> dim_vector,
             std::vector<Weight> theta);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::vector<std::size_t>& dim_vector() const { return dim_; }
  const std::vector<Weight>& theta() const { return theta_; }

  /// adjacency[i][j] = number of arrows i -> j.
  std::vector<std::vector<std::int64_t>> adjacency() const;
  bool is_thin() const;

  /// prod GL_{v_i} over the vertices with v_i > 0.
  GroupSpec group() const;
  /// Group factor index of each vertex, or nullopt for zero-dimensional vertices.
  std::vector<std::optional<std::size_t>> factor_of_vertex() const;

  friend bool operator==(const QuiverSpec&, const QuiverSpec&) = default;

 private:
  std::size_t vertex_count_;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> dim_;
  std::vector<Weight> theta_;
};

/// Thin representation: one scalar per arrow. Arrows touching a
/// zero-dimensional vertex must carry the value 0.
class ThinQuiverRep {
 public:
  ThinQuiverRep(QuiverSpec spec, std::vector<ComplexRational> arrow_values);

  const QuiverSpec& spec() const { return spec_; }
  const std::vector<ComplexRational>& values() const { return values_; }

  friend bool operator==(const ThinQuiverRep&, const ThinQuiverRep&) = default;

 private:
  QuiverSpec spec_;
  std::vector<ComplexRational> values_;
};

struct ControlSpec {
  std::size_t n = 0;  // state dimension
  std::size_t m = 0;  // input dimension
  friend bool operator==(const ControlSpec&, const ControlSpec&) = default;
};

class ControlInstance {
 public:
  ControlInstance(RationalMatrix a, RationalMatrix b);

  std::size_t n() const { return a_.rows(); }
  std::size_t m() const { return b_.cols(); }
  const RationalMatrix& a() const { return a_; }
  const RationalMatrix& b() const { return b_; }

  friend bool operator==(const ControlInstance&, const ControlInstance&) = default;

 private:
  RationalMatrix a_;
  RationalMatrix b_;
};

struct DagSpec {
  std::size_t n = 0;  // observations
  std::size_t k = 0;  // parents
  friend bool operator==(const DagSpec&, const DagSpec&) = default;
};

/// Sample matrix Y = [X | y] of shape n x (k+1).
class DagInstance {
 public:
  DagInstance(std::size_t k, RationalMatrix y);

  std::size_t n() const { return y_.rows(); }
  std::size_t k() const { return k_; }
  const RationalMatrix& samples() const { return y_; }
  RationalMatrix parents() const { return y_.column_block(0, k_); }
  std::vector<Rational> child() const { return y_.column(k_); }

  friend bool operator==(const DagInstance&, const DagInstance&) = default;

 private:
  std::size_t k_;
  RationalMatrix y_;
};

using FamilySpec = std::variant<QuiverSpec, ControlSpec, DagSpec>;
using ModelInstance = std::variant<ThinQuiverRep, ControlInstance, DagInstance>;

Family family_of(const FamilySpec& f);
Family family_of(const ModelInstance& x);
FamilySpec spec_of(const ModelInstance& x);
GroupSpec family_group(const FamilySpec& f);
/// Dimension of the ambient affine space V.
std::size_t ambient_dim(const FamilySpec& f);

// ---------------------------------------------------------------------------
// Group actions

/// (g A g^-1, g B).
ControlInstance act(const RationalMatrix& g, const ControlInstance& c);
/// Y . diag(a, t^-1).
DagInstance act(const DagInstance& d, const RationalMatrix& a, const Rational& t);
/// Arrow i -> j value v becomes g_j v g_i^-1.
ThinQuiverRep act(const std::vector<ComplexRational>& vertex_scalars, const ThinQuiverRep& rep);

/// lambda(t) . x, evaluated through the concrete group action.
ModelInstance act_one_ps(const ModelInstance& x, const OnePS& lambda, const Rational& t);

// ---------------------------------------------------------------------------
// Weight bookkeeping

struct WeightDecomposition {
  std::map<Weight, ModelInstance> components;

  ModelInstance negative_part() const;
  ModelInstance nonnegative_part() const;
  /// Sum of all components.
  ModelInstance total() const;
};

WeightDecomposition weight_decompose(const ModelInstance& x, const OnePS& lambda);

/// True iff lim_{t -> 0} lambda(t) . x exists, i.e. every coordinate of
/// negative weight vanishes.
bool limit_exists(const ModelInstance& x, const OnePS& lambda);

/// dim V(lambda)_-, independent of the point.
std::size_t negative_weight_dim(const FamilySpec& f, const OnePS& lambda);

/// d (I - A) e^T.
std::int64_t euler_form(const QuiverSpec& spec, std::span<const std::int64_t> d, std::span<const std::int64_t> e);

/// Per-vertex weight lists of a quiver one-parameter subgroup
/// (empty for zero-dimensional vertices).
std::vector<std::vector<Weight>> quiver_vertex_weights(const QuiverSpec& spec, const OnePS& lambda);
/// Inverse of quiver_vertex_weights.
OnePS quiver_one_ps(const QuiverSpec& spec, const std::vector<std::vector<Weight>>& per_vertex);

// ---------------------------------------------------------------------------
// Destabilizing classes

/// quiver: sub-dimension vector d'; control: invariant subspace dimension r;
/// dag: number of redundant parent columns j.
using StratumDescriptor = std::variant<std::vector<std::size_t>, std::size_t>;

struct StratumClass {
  Family family;
  StratumDescriptor descriptor;
  OnePS representative;
  std::size_t m = 0;
  std::size_t orbit_dim = 0;
  std::int64_t value = 0;  // 2m - 2 orbit_dim
  OrbitConvention convention = OrbitConvention::Parabolic;

  friend bool operator==(const StratumClass&, const StratumClass&) = default;
};

std::vector<StratumClass> enumerate_strata(const FamilySpec& f, OrbitConvention conv);

/// Parabolic for quivers and control pairs, Centralizer for DAG samples.
OrbitConvention default_convention(Family f);

// ---------------------------------------------------------------------------
// Stability

enum class Verdict { Stable, NotStable, Unstable };
std::string_view to_string(Verdict v);

struct StabilityStatus {
  Family family;
  Verdict verdict;
  std::string reason;
  std::optional<std::size_t> invariant_subspace_dim;          // control
  std::optional<std::size_t> parent_rank;                     // dag
  std::optional<std::vector<std::size_t>> destabilizing_support;  // quiver, 0-indexed

  bool is_stable() const { return verdict == Verdict::Stable; }
  friend bool operator==(const StabilityStatus&, const StabilityStatus&) = default;
};

/// [B, AB, ..., A^{n-1} B].
RationalMatrix controllability_matrix(const ControlInstance& c);

StabilityStatus control_status(const ControlInstance& c);
/// Exhaustive over vertex subsets; vertex_count > 20 raises SizeError.
StabilityStatus quiver_thin_status(const ThinQuiverRep& rep);
StabilityStatus dag_status(const DagInstance& d);
StabilityStatus status(const ModelInstance& x);

/// Unique solution of X^T (y - X beta) = 0; PreconditionError unless X has
/// full column rank.
std::vector<Rational> dag_solve_mle(const DagInstance& d);

/// Adds eps-multiples of an orthogonal basis of col(X)^perp to the parent
/// columns that are redundant given the ones before them. Stable inputs are
/// returned unchanged. Throws DomainError when n < k and when eps == 0.
DagInstance dag_stabilize(const DagInstance& d, const Rational& eps);

}  // namespace gitstab
