#include "dml/shell/witnesses.hpp"

#include <map>

namespace dml {

const std::vector<WitnessRecord>& printed_witnesses() {
  static const std::vector<WitnessRecord> w = {
      {"D7_14", "D7_12",
       "E1 = t*e4\n"
       "E2 = t^2*e2 - e3\n"
       "E3 = t*e3 + t*e5 + t^3*e6\n"
       "E4 = e1 + e2 + t^2*e4 - e5\n"
       "E5 = t*e7\n"
       "E6 = t^3*e6\n"
       "E7 = e5 + e6\n",
       true, ""},
      {"D7_14", "D7_07",
       "E1 = t*e1\n"
       "E2 = e6\n"
       "E3 = e2\n"
       "E4 = -t*e5\n"
       "E5 = t*e3\n"
       "E6 = e4\n"
       "E7 = t*e7\n",
       true, ""},
      {"D8_36", "D8_14",
       "E1 = e1\n"
       "E2 = e2\n"
       "E3 = e3\n"
       "E4 = e4\n"
       "E5 = e5\n"
       "E6 = e6\n"
       "E7 = e8\n"
       "E8 = t*e7\n",
       true, "improper: D8_36 and D8_14 are isomorphic"},
  };
  return w;
}

const std::vector<WitnessRecord>& seven_dim_witnesses() {
  static const std::vector<WitnessRecord> w = [] {
    std::vector<WitnessRecord> v = {
        {"D7_01", "C7", "E1 = t*e1\nE2 = t*e2\nE3 = t*e3\nE4 = t*e4\nE5 = t*e5\nE6 = t*e6\nE7 = t*e7\n", false,
         "scaling"},
        {"D7_02", "D7_01", "E3 = e5\nE4 = t*e3\nE5 = e4\n", false, ""},
        {"D7_03", "D7_01", "E3 = e4\nE4 = t*e3\nE5 = e5\n", false, ""},
        {"D7_07", "D7_02", "E5 = e7\nE6 = t*e5\nE7 = e6\n", false, ""},
        {"D7_06", "D7_03", "E2 = t*e2\nE3 = t*e3\nE4 = t*e4\nE5 = t*e5\n", false, ""},
        {"D7_10", "D7_03", "E1 = e2\nE2 = e1\nE3 = e3\nE4 = -e5\nE5 = e6\nE6 = t*e4\nE7 = e7\n", false, ""},
        {"D7_05", "D7_03", "E4 = e5\nE5 = e6\nE6 = t*e4\n", false, ""},
        {"D7_05", "D7_02", "E1 = t*e1\nE2 = t*e2\nE3 = t*e3\nE4 = t*e4\nE5 = t^2*e5\nE6 = t*e6\n", false, ""},
        {"D7_04", "D7_05",
         "E1 = e1 + e2\nE2 = t*e3\nE3 = e3 + t*e4\nE4 = -t*e1\nE5 = t*e5\nE6 = e5 + t*e6\nE7 = e7\n", false, ""},
        {"D7_12", "D7_10", "E3 = t*e3\nE6 = t*e6\n", false, ""},
        {"D7_12", "D7_06", "E1 = e2\nE2 = e3\nE3 = e4\nE4 = e6\nE5 = e7\nE6 = e5\nE7 = t*e1\n", false, ""},
        {"D7_08", "D7_04", "E1 = e1\nE2 = e3\nE3 = e2\nE4 = e5\nE5 = e6\nE6 = e7\nE7 = t*e4\n", false, ""},
        {"D7_11", "D7_12",
         "E1 = t*e1 - t*e4\nE2 = e2 + e3\nE3 = t*e3 - t*e2\nE4 = e1 + e4\nE5 = t*e5 + t*e7\nE6 = 2*t*e6\n"
         "E7 = e7 - e5\n",
         false, ""},
        {"D7_13", "D7_11", "E1 = e4\nE2 = e2\nE3 = e1\nE4 = t*e3\nE5 = -e7\nE6 = -e5\nE7 = t*e6\n", false, ""},
        {"D7_09", "D7_08", "E1 = -e3\nE2 = t*e4\nE3 = -e5\nE4 = t*e2\nE5 = t*e1\nE6 = -2*t*e5 - t*e6\nE7 = t*e7\n",
         false, ""},
    };
    for (const auto& p : printed_witnesses())
      if (p.source.rfind("D7_", 0) == 0) v.push_back(p);
    return v;
  }();
  return w;
}

std::optional<WitnessRecord> find_witness(const std::string& source, const std::string& target) {
  for (const auto* list : {&printed_witnesses(), &seven_dim_witnesses()})
    for (const auto& w : *list)
      if (w.source == source && w.target == target) return w;
  return std::nullopt;
}

const std::vector<IsomorphismRecord>& recorded_isomorphisms() {
  static const std::vector<IsomorphismRecord> r = {
      {"D8_36", "D8_14",
       "E1 = e1\nE2 = e2\nE3 = e3\nE4 = e4\nE5 = e5\nE6 = e6\nE7 = e8\nE8 = e7 - e4\n",
       "e7 - e4 lies in the annihilator of D8_36, so D8_36 splits off a trivial summand"},
  };
  return r;
}

const std::vector<FigureEdge>& seven_dim_figure_edges() {
  static const std::vector<FigureEdge> e = {
      {"D7_01", "C7"},    {"D7_14", "D7_12"}, {"D7_02", "D7_01"}, {"D7_03", "D7_01"}, {"D7_07", "D7_02"},
      {"D7_06", "D7_03"}, {"D7_10", "D7_03"}, {"D7_05", "D7_03"}, {"D7_05", "D7_02"}, {"D7_04", "D7_05"},
      {"D7_12", "D7_10"}, {"D7_12", "D7_06"}, {"D7_12", "D7_04"}, {"D7_08", "D7_04"}, {"D7_14", "D7_07"},
      {"D7_11", "D7_12"}, {"D7_09", "D7_08"}, {"D7_13", "D7_11"},
  };
  return e;
}

const std::vector<DisputedEdge>& disputed_edges() {
  static const std::vector<DisputedEdge> d = {
      {"D7_12", "D7_04",
       "every form f(xy) of D7_12 restricted to e1..e4 has Pfaffian a^2 (a square), while D7_04 has "
       "Pfaffian -ab; the square-Pfaffian locus is closed, so the degeneration is impossible"},
  };
  return d;
}

std::optional<std::size_t> seven_dim_figure_level(const std::string& id) {
  static const std::map<std::string, std::size_t> levels = {
      {"D7_09", 30}, {"D7_13", 30}, {"D7_11", 29}, {"D7_14", 28}, {"D7_08", 28},
      {"D7_12", 27}, {"D7_04", 26}, {"D7_05", 25}, {"D7_06", 24}, {"D7_10", 24},
      {"D7_03", 22}, {"D7_07", 21}, {"D7_02", 20}, {"D7_01", 15}, {"C7", 0},
  };
  if (auto it = levels.find(id); it != levels.end()) return it->second;
  return std::nullopt;
}

}  // namespace dml
