#pragma once

#include <string>
#include <vector>

#include "fmra/contraction.hpp"

namespace fmra {

/// Finite composition word (i_1,...,i_k); i_1 is the innermost letter, so the
/// word acts as tau_{i_k} o ... o tau_{i_1}.
using Word = std::vector<int>;

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Gap-filled IFS: N increasing contractions chaining across [0,1], with the
/// core index set A marking the original (non-filler) maps.
class IFSystem {
 public:
  IFSystem(std::vector<Contraction> maps, std::vector<int> core,
           std::string name = "");

  const std::vector<Contraction>& maps() const { return maps_; }
  const Contraction& map(int i) const { return maps_.at(i); }
  const std::vector<int>& core() const { return core_; }
  const std::string& name() const { return name_; }

  int branch_count() const { return static_cast<int>(maps_.size()); }  // N
  int core_count() const { return static_cast<int>(core_.size()); }    // p
  double c_max() const { return c_max_; }
  bool in_core(int i) const;
  /// log p / log N, meaningful for homogeneous linear systems.
  double hausdorff_dimension() const;

  /// Gap letters {0..N-1} \ A, ascending.
  std::vector<int> gap_letters() const;

  ValidationReport validate() const;

 private:
  std::vector<Contraction> maps_;
  std::vector<int> core_;
  std::string name_;
  double c_max_ = 0;
};

/// Fill the gaps around/between the core maps with increasing affine pieces,
/// `subdivisions` per gap. Zero-length gaps are skipped.
IFSystem gap_fill(const std::vector<Contraction>& core_maps, int subdivisions = 1,
                  std::string name = "");

/// tau_{i_k}(...tau_{i_1}(x)...); empty word is the identity.
double word_apply(const IFSystem& sys, const Word& word, double x);

}  // namespace fmra
