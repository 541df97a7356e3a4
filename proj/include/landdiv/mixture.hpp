#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "landdiv/composition.hpp"
#include "landdiv/kde.hpp"

#include "json.hpp"

namespace landdiv::mixture {

enum class ComponentKind { kPointMass, kDiscrete, kKde };

// One subsimplex of the decomposition: how points on this face are
// modelled and how often the face is drawn.
struct Component {
  SubsimplexMask mask;
  std::size_t count = 0; // points observed on the face
  ComponentKind kind = ComponentKind::kDiscrete;

  // kPointMass: the vertex; kDiscrete: equally probable face points
  // (reduced coordinates); kKde: model + plan + envelope.
  std::vector<Composition> face_points;
  std::optional<kde::KdeModel> model;
  std::optional<kde::EulerMaclaurinPlan> plan;
  double envelope = 0.0;
};

struct MixtureModel {
  int dim = 0;           // full cover count
  std::size_t total = 0; // dataset size; q_delta = count / total exactly
  std::vector<Component> components; // sorted by mask
};

struct DecomposeConfig {
  std::size_t min_count = 30;
  double eta = 1e-4;
  double zero_tol = kDefaultZeroTol;
  std::size_t envelope_probes = 10000;
  double envelope_safety = 1.2;
  std::uint64_t envelope_seed = 77001;
};

/// Group the dataset by subsimplex and fit one component per face:
/// KDE where the face has >= min_count points and dimension >= 1,
/// a discrete equally-probable population otherwise, point masses on
/// vertices. Throws if a KDE face has no bandwidth in lambda_per_face.
MixtureModel decompose(std::span<const Composition> dataset,
                       const WeightVector& w,
                       const std::map<SubsimplexMask, double>& lambda_per_face,
                       const DecomposeConfig& cfg = {});

// Envelope constant for acceptance/rejection on one face: safety times
// the maximum of the approximated density over the model's own points
// plus probe_count uniform face points. The sampler aborts if any later
// evaluation exceeds it.
double envelope_constant(const kde::KdeModel& face_model,
                         const kde::EulerMaclaurinPlan& plan,
                         std::size_t probe_count, double safety,
                         std::uint64_t seed);

/// Draw `count` points: choose a face with probability count/total, then
/// sample its component (acceptance/rejection for KDE faces). Outputs are
/// full compositions with exact zeros on absent covers.
std::vector<Composition> sample(const MixtureModel& model, std::size_t count,
                                std::uint64_t seed);

/// Acceptance/rejection draws from a single face KDE, in face coordinates.
std::vector<Composition> sample_face_kde(const kde::KdeModel& model,
                                         const kde::EulerMaclaurinPlan& plan,
                                         double envelope, std::size_t count,
                                         Rng& rng);

nlohmann::json to_json(const MixtureModel& model);
MixtureModel from_json(const nlohmann::json& j);
void save(const MixtureModel& model, const std::string& path);
MixtureModel load(const std::string& path);

} // namespace landdiv::mixture
