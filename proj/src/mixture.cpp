#include "landdiv/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "landdiv/errors.hpp"

namespace landdiv::mixture {

MixtureModel decompose(std::span<const Composition> dataset,
                       const WeightVector& w,
                       const std::map<SubsimplexMask, double>& lambda_per_face,
                       const DecomposeConfig& cfg) {
  if (dataset.empty()) throw std::invalid_argument("decompose: empty dataset");
  const std::size_t dim = dataset.front().size();
  if (w.size() != dim)
    throw std::invalid_argument("decompose: weight/composition length mismatch");

  std::map<SubsimplexMask, std::vector<Composition>> groups;
  for (const Composition& c : dataset) {
    if (c.size() != dim) throw std::invalid_argument("decompose: ragged dataset");
    groups[subsimplex_of(c, cfg.zero_tol)].push_back(c);
  }

  MixtureModel model;
  model.dim = static_cast<int>(dim);
  model.total = dataset.size();
  for (auto& [mask, members] : groups) {
    Component comp;
    comp.mask = mask;
    comp.count = members.size();
    const std::size_t active = mask.active_count();
    if (active == 1) {
      comp.kind = ComponentKind::kPointMass;
    } else if (members.size() < cfg.min_count) {
      comp.kind = ComponentKind::kDiscrete;
      comp.face_points.reserve(members.size());
      for (const Composition& c : members)
        comp.face_points.push_back(reduce_to_face(c, mask));
    } else {
      const auto it = lambda_per_face.find(mask);
      if (it == lambda_per_face.end())
        throw std::invalid_argument("decompose: no bandwidth for face " +
                                    mask.to_string());
      comp.kind = ComponentKind::kKde;
      std::vector<Composition> reduced;
      reduced.reserve(members.size());
      for (const Composition& c : members)
        reduced.push_back(reduce_to_face(c, mask));
      comp.model = kde::build(std::move(reduced), it->second, cfg.eta);
      comp.plan = kde::plan_euler_maclaurin(*comp.model);
      comp.envelope =
          envelope_constant(*comp.model, *comp.plan, cfg.envelope_probes,
                            cfg.envelope_safety, cfg.envelope_seed);
    }
    model.components.push_back(std::move(comp));
  }
  return model;
}

double envelope_constant(const kde::KdeModel& face_model,
                         const kde::EulerMaclaurinPlan& plan,
                         std::size_t probe_count, double safety,
                         std::uint64_t seed) {
  double peak = 0.0;
  for (const Composition& z : face_model.points)
    peak = std::max(peak, kde::eval_euler_maclaurin(face_model, plan, z));
  Rng rng(seed);
  const std::size_t dim = static_cast<std::size_t>(face_model.dim);
  for (std::size_t t = 0; t < probe_count; ++t) {
    const Composition x = sample_uniform_simplex_one(dim, rng);
    peak = std::max(peak, kde::eval_euler_maclaurin(face_model, plan, x));
  }
  return safety * peak;
}

namespace {

Composition vertex_composition(const SubsimplexMask& mask) {
  std::vector<double> parts(mask.size(), 0.0);
  parts[mask.active_indices().front()] = 1.0;
  return Composition(std::move(parts));
}

} // namespace

std::vector<Composition> sample(const MixtureModel& model, std::size_t count,
                                std::uint64_t seed) {
  if (model.components.empty())
    throw std::invalid_argument("mixture sample: empty model");
  Rng rng(seed);
  std::vector<Composition> out;
  out.reserve(count);

  // Cumulative counts give the exact q_delta = count/total law.
  std::vector<std::size_t> cumulative;
  cumulative.reserve(model.components.size());
  std::size_t running = 0;
  for (const Component& comp : model.components) {
    running += comp.count;
    cumulative.push_back(running);
  }
  if (running != model.total)
    throw std::invalid_argument("mixture sample: counts do not add up");

  std::vector<std::size_t> proposals(model.components.size(), 0);
  std::vector<std::size_t> accepts(model.components.size(), 0);

  while (out.size() < count) {
    const std::size_t pick = rng.uniform_index(model.total);
    const std::size_t ci = static_cast<std::size_t>(
        std::upper_bound(cumulative.begin(), cumulative.end(), pick) -
        cumulative.begin());
    const Component& comp = model.components[ci];
    switch (comp.kind) {
      case ComponentKind::kPointMass:
        out.push_back(vertex_composition(comp.mask));
        break;
      case ComponentKind::kDiscrete: {
        const std::size_t k = rng.uniform_index(comp.face_points.size());
        out.push_back(embed_from_face(comp.face_points[k], comp.mask));
        break;
      }
      case ComponentKind::kKde: {
        // Acceptance/rejection with a uniform proposal on the face.
        for (;;) {
          ++proposals[ci];
          if (proposals[ci] >= 1000000 &&
              accepts[ci] * 1000000 < proposals[ci])
            throw NumericalError("mixture sample: acceptance rate below 1e-6 "
                                 "on face " + comp.mask.to_string());
          const Composition x = sample_uniform_simplex_one(
              static_cast<std::size_t>(comp.model->dim), rng);
          const double density =
              kde::eval_euler_maclaurin(*comp.model, *comp.plan, x);
          if (density > comp.envelope)
            throw NumericalError(
                "mixture sample: envelope violated on face " +
                comp.mask.to_string() + " (density " +
                std::to_string(density) + " > C " +
                std::to_string(comp.envelope) + ")");
          if (rng.uniform() * comp.envelope <= density) {
            ++accepts[ci];
            out.push_back(embed_from_face(x, comp.mask));
            break;
          }
        }
        break;
      }
    }
  }
  return out;
}

nlohmann::json to_json(const MixtureModel& model) {
  nlohmann::json j;
  j["format"] = "landdiv.mixture";
  j["version"] = 1;
  j["dim"] = model.dim;
  j["total"] = model.total;
  nlohmann::json comps = nlohmann::json::array();
  for (const Component& comp : model.components) {
    nlohmann::json cj;
    cj["mask"] = comp.mask.to_string();
    cj["count"] = comp.count;
    switch (comp.kind) {
      case ComponentKind::kPointMass:
        cj["type"] = "point_mass";
        break;
      case ComponentKind::kDiscrete: {
        cj["type"] = "discrete";
        nlohmann::json pts = nlohmann::json::array();
        for (const Composition& p : comp.face_points) pts.push_back(p.parts());
        cj["points"] = std::move(pts);
        break;
      }
      case ComponentKind::kKde:
        cj["type"] = "kde";
        cj["model"] = kde::to_json(*comp.model);
        cj["envelope"] = comp.envelope;
        break;
    }
    comps.push_back(std::move(cj));
  }
  j["components"] = std::move(comps);
  return j;
}

MixtureModel from_json(const nlohmann::json& j) {
  if (j.value("format", "") != "landdiv.mixture" || j.value("version", 0) != 1)
    throw InputError("mixture: unrecognized model document");
  MixtureModel model;
  model.dim = j.at("dim").get<int>();
  model.total = j.at("total").get<std::size_t>();
  for (const auto& cj : j.at("components")) {
    Component comp;
    comp.mask = SubsimplexMask::from_string(cj.at("mask").get<std::string>());
    comp.count = cj.at("count").get<std::size_t>();
    const std::string type = cj.at("type").get<std::string>();
    if (type == "point_mass") {
      comp.kind = ComponentKind::kPointMass;
    } else if (type == "discrete") {
      comp.kind = ComponentKind::kDiscrete;
      for (const auto& row : cj.at("points"))
        comp.face_points.emplace_back(row.get<std::vector<double>>());
    } else if (type == "kde") {
      comp.kind = ComponentKind::kKde;
      comp.model = kde::from_json(cj.at("model"));
      comp.plan = kde::plan_euler_maclaurin(*comp.model);
      comp.envelope = cj.at("envelope").get<double>();
    } else {
      throw InputError("mixture: unknown component type " + type);
    }
    model.components.push_back(std::move(comp));
  }
  return model;
}

void save(const MixtureModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("mixture: cannot open " + path + " for writing");
  out << to_json(model).dump(2) << '\n';
}

MixtureModel load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("mixture: cannot open " + path);
  nlohmann::json j;
  in >> j;
  return from_json(j);
}

} // namespace landdiv::mixture
