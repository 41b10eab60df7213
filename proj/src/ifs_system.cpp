#include "fmra/ifs_system.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fmra {

namespace {
constexpr double kChainTol = 1e-9;
}

IFSystem::IFSystem(std::vector<Contraction> maps, std::vector<int> core, std::string name)
    : maps_(std::move(maps)), core_(std::move(core)), name_(std::move(name)) {
  if (maps_.empty()) throw std::invalid_argument("IFSystem: no maps");
  std::sort(core_.begin(), core_.end());
  if (core_.empty() || core_.front() < 0 || core_.back() >= branch_count())
    throw std::invalid_argument("IFSystem: core indices out of range");
  c_max_ = 0;
  for (const auto& m : maps_) c_max_ = std::max(c_max_, m.lipschitz());
}

bool IFSystem::in_core(int i) const {
  return std::binary_search(core_.begin(), core_.end(), i);
}

double IFSystem::hausdorff_dimension() const {
  return std::log(double(core_count())) / std::log(double(branch_count()));
}

std::vector<int> IFSystem::gap_letters() const {
  std::vector<int> g;
  for (int i = 0; i < branch_count(); ++i)
    if (!in_core(i)) g.push_back(i);
  return g;
}

ValidationReport IFSystem::validate() const {
  ValidationReport rep;
  auto fail = [&rep](std::string msg) {
    rep.ok = false;
    rep.violations.push_back(std::move(msg));
  };

  const int N = branch_count();
  for (int i = 0; i < N; ++i) {
    const auto& m = maps_[i];
    if (!m.increasing_on_unit()) fail("map " + std::to_string(i) + " not increasing");
    if (!m.maps_unit_into_unit())
      fail("map " + std::to_string(i) + " does not map [0,1] into [0,1]");
    if (m.lipschitz() >= 1.0)
      fail("map " + std::to_string(i) + " has contraction constant >= 1");
  }
  if (std::abs(maps_.front().eval(0.0)) > kChainTol) fail("tau_0(0) != 0");
  if (std::abs(maps_.back().eval(1.0) - 1.0) > kChainTol) fail("tau_{N-1}(1) != 1");
  for (int i = 0; i + 1 < N; ++i) {
    double left = maps_[i].eval(1.0), right = maps_[i + 1].eval(0.0);
    if (std::abs(left - right) > kChainTol)
      fail("tau_" + std::to_string(i) + "(1)=" + std::to_string(left) +
           " != tau_" + std::to_string(i + 1) + "(0)=" + std::to_string(right));
  }
  return rep;
}

IFSystem gap_fill(const std::vector<Contraction>& core_maps, int subdivisions,
                  std::string name) {
  if (core_maps.empty()) throw std::invalid_argument("gap_fill: no core maps");
  if (subdivisions < 1) throw std::invalid_argument("gap_fill: subdivisions < 1");
  for (std::size_t i = 0; i < core_maps.size(); ++i) {
    const auto& m = core_maps[i];
    if (!m.increasing_on_unit() || !m.maps_unit_into_unit() || m.lipschitz() >= 1.0)
      throw std::invalid_argument("gap_fill: core map " + std::to_string(i) + " invalid");
    if (i + 1 < core_maps.size() &&
        core_maps[i].eval(1.0) > core_maps[i + 1].eval(0.0) + 1e-12)
      throw std::invalid_argument("gap_fill: core maps not in ascending order");
  }

  std::vector<Contraction> maps;
  std::vector<int> core;
  auto fill_gap = [&](double lo, double hi) {
    if (hi - lo < 1e-15) return;
    if (hi - lo >= 1.0)
      throw std::invalid_argument("gap_fill: filler would not contract");
    double step = (hi - lo) / subdivisions;
    for (int j = 0; j < subdivisions; ++j)
      maps.push_back(Contraction::affine(step, lo + j * step));
  };

  double cursor = 0.0;
  for (const auto& m : core_maps) {
    fill_gap(cursor, m.eval(0.0));
    core.push_back(static_cast<int>(maps.size()));
    maps.push_back(m);
    cursor = m.eval(1.0);
  }
  fill_gap(cursor, 1.0);
  return IFSystem(std::move(maps), std::move(core), std::move(name));
}

double word_apply(const IFSystem& sys, const Word& word, double x) {
  for (int letter : word) {
    if (letter < 0 || letter >= sys.branch_count())
      throw std::out_of_range("word_apply: letter out of range");
    x = sys.map(letter).eval(x);
  }
  return x;
}

}  // namespace fmra
