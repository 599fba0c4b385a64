#include "hindlab/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "hindlab/error.hpp"
#include "hindlab/setfile.hpp"

namespace hindlab {

using nlohmann::json;

std::string ratio_string(const Ratio& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

ClassificationReport classify(const WindowedSet& s, const ScaleParams& scales) {
  if (s.size() < scales.ps_L || s.size() < scales.search_bound) {
    throw Error(Errc::window_too_small, "window of size " + std::to_string(s.size()) +
                                            " is shorter than ps_L or the search bound");
  }
  scales.validate(s.size());
  ClassificationReport r;
  r.lo = s.lo();
  r.hi = s.hi();
  r.count = s.count();
  r.scales = scales;
  r.thick = is_thick_at(s, scales.thick_L);
  r.syndetic = is_syndetic_at(s, scales.syndetic_g);
  r.piecewise_syndetic = is_piecewise_syndetic_at(s, scales.syndetic_g, scales.ps_L);
  r.thickly_syndetic = is_thickly_syndetic_at(s, scales.syndetic_g, scales.ps_L);

  std::vector<std::int64_t> lengths{scales.syndetic_g, scales.thick_L, scales.ps_L, s.size()};
  std::erase_if(lengths, [&](std::int64_t w) { return w > s.size(); });
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  r.density = density_profile(s, lengths);
  r.gaps = gap_statistics(s);

  r.effective_bound = std::min(scales.search_bound, s.hi());
  if (r.effective_bound >= 1) {
    r.delta_witness = find_delta_subset(s, scales.delta_order, r.effective_bound);
    r.ip_witness = find_ip_subset(s, scales.ip_arity, r.effective_bound);
  } else {
    r.effective_bound = 0;
  }
  if (r.count >= 2) {
    r.chunks = has_progressive_gaps(s);
    r.progressive_gaps = r.chunks.has_value();
  }
  return r;
}

namespace {

json witness_json(const std::optional<std::vector<std::int64_t>>& w) { return w ? json(*w) : json(nullptr); }

std::string witness_text(const std::optional<std::vector<std::int64_t>>& w) {
  if (!w) return "none";
  std::string out = "(";
  for (std::size_t i = 0; i < w->size(); ++i) out += (i ? "," : "") + std::to_string((*w)[i]);
  return out + ")";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

json runs_json(const WindowedSet& s) {
  json runs = json::array();
  std::optional<std::int64_t> start;
  std::int64_t prev = 0;
  s.for_each_member([&](std::int64_t n) {
    if (start && n == prev + 1) {
      prev = n;
      return;
    }
    if (start) runs.push_back({*start, prev});
    start = n;
    prev = n;
  });
  if (start) runs.push_back({*start, prev});
  return runs;
}

json verdict_json(const Verdict& v) {
  return json{{"pass", v.pass}, {"witness", v.witness ? json(*v.witness) : json(nullptr)}};
}

}  // namespace

std::string render(const ClassificationReport& r, Format f) {
  if (f == Format::structured) {
    json density = json::array();
    for (std::size_t i = 0; i < r.density.window_lengths.size(); ++i) {
      density.push_back({{"length", r.density.window_lengths[i]},
                         {"max", ratio_string(r.density.max_density[i])},
                         {"min", ratio_string(r.density.min_density[i])}});
    }
    json j{
        {"window", {r.lo, r.hi}},
        {"count", r.count},
        {"scales",
         {{"thick_L", r.scales.thick_L},
          {"syndetic_g", r.scales.syndetic_g},
          {"ps_L", r.scales.ps_L},
          {"delta_order", r.scales.delta_order},
          {"ip_arity", r.scales.ip_arity},
          {"search_bound", r.effective_bound}}},
        {"thick", r.thick},
        {"syndetic", r.syndetic},
        {"piecewise_syndetic", r.piecewise_syndetic},
        {"thickly_syndetic", r.thickly_syndetic},
        {"density", density},
        {"upper_density_estimate", ratio_string(r.density.upper_estimate)},
        {"lower_density_estimate", ratio_string(r.density.lower_estimate)},
        {"gaps",
         {{"max_interior_gap", r.gaps.max_gap},
          {"longest_run", r.gaps.longest_run},
          {"leading_gap", r.gaps.leading_gap},
          {"trailing_gap", r.gaps.trailing_gap}}},
        {"delta_witness", witness_json(r.delta_witness)},
        {"ip_witness", witness_json(r.ip_witness)},
        {"progressive_gaps", r.progressive_gaps ? json(*r.progressive_gaps) : json(nullptr)},
    };
    if (r.chunks) j["chunks"] = r.chunks->chunks;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "window [" << r.lo << ", " << r.hi << "] members " << r.count << '\n';
  os << "thick(L=" << r.scales.thick_L << ") " << yes_no(r.thick) << '\n';
  os << "syndetic(g=" << r.scales.syndetic_g << ") " << yes_no(r.syndetic) << '\n';
  os << "piecewise_syndetic(g=" << r.scales.syndetic_g << ",L=" << r.scales.ps_L << ") "
     << yes_no(r.piecewise_syndetic) << '\n';
  os << "thickly_syndetic(g=" << r.scales.syndetic_g << ",L=" << r.scales.ps_L << ") "
     << yes_no(r.thickly_syndetic) << '\n';
  for (std::size_t i = 0; i < r.density.window_lengths.size(); ++i) {
    os << "density w=" << r.density.window_lengths[i] << " max " << ratio_string(r.density.max_density[i])
       << " min " << ratio_string(r.density.min_density[i]) << '\n';
  }
  os << "gaps max_interior " << r.gaps.max_gap << " longest_run " << r.gaps.longest_run << " leading "
     << r.gaps.leading_gap << " trailing " << r.gaps.trailing_gap << '\n';
  os << "delta(m=" << r.scales.delta_order << ",bound=" << r.effective_bound << ") "
     << witness_text(r.delta_witness) << '\n';
  os << "ip(k=" << r.scales.ip_arity << ",bound=" << r.effective_bound << ") " << witness_text(r.ip_witness)
     << '\n';
  os << "progressive_gaps ";
  if (!r.progressive_gaps) {
    os << "n/a\n";
  } else if (r.chunks) {
    os << "true chunks " << r.chunks->chunks.size() << '\n';
  } else {
    os << "false\n";
  }
  return os.str();
}

std::string render(const EvidenceReport& r, Format f) {
  if (f == Format::text) return r.to_text();
  json pairs = json::array();
  for (const auto& e : r.pairs) {
    pairs.push_back({{"u", e.u.to_string()},
                     {"v", e.v.to_string()},
                     {"transitive", verdict_json(e.transitive)},
                     {"mixing", verdict_json(e.mixing)}});
  }
  json j{{"detector", r.detector.to_string()},
         {"max_word_len", r.max_word_len},
         {"window", {r.window.lo, r.window.hi}},
         {"pairs", pairs},
         {"transitive_failures", r.transitive_failures()},
         {"mixing_failures", r.mixing_failures()},
         {"verdict", r.all_pass() ? "pass" : "fail"}};
  return j.dump(2) + "\n";
}

std::string render(const ComplexityProfile& p, Format f) {
  if (f == Format::structured) {
    json j{{"profile", p.values},
           {"strictly_increasing", p.strictly_increasing},
           {"verdict", std::string(to_string(p.verdict))}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "profile";
  for (const auto v : p.values) os << ' ' << v;
  os << "\nstrictly_increasing " << yes_no(p.strictly_increasing) << "\nverdict " << to_string(p.verdict) << '\n';
  return os.str();
}

std::string render_return_set(const WindowedSet& s, const Word& u, const Word& v, Format f) {
  if (f == Format::structured) {
    json j{{"u", u.to_string()}, {"v", v.to_string()}, {"window", {s.lo(), s.hi()}}, {"runs", runs_json(s)}};
    return j.dump(2) + "\n";
  }
  return serialize_set(s, {"return set N(U,V) U=" + u.to_string() + " V=" + v.to_string()});
}

NuvSummary nuv_check_all(const SpacingShift& p, std::int64_t max_word_len) {
  const auto words = language_words(p, max_word_len);
  NuvSummary out;
  for (const auto& u : words) {
    for (const auto& v : words) {
      const NuvCheck c = nuv_check(p, u, v);
      ++out.pairs;
      out.outside_mismatches += c.outside_mismatches;
      out.containment_violations += c.containment_violations;
      out.max_c_size = std::max(out.max_c_size, c.c_size);
      if (!c.ok()) out.failures.push_back(u.to_string() + " " + v.to_string() + " " + std::to_string(*c.first_bad));
    }
  }
  return out;
}

std::string render(const NuvSummary& s, Format f) {
  if (f == Format::structured) {
    json j{{"pairs", s.pairs},
           {"outside_mismatches", s.outside_mismatches},
           {"containment_violations", s.containment_violations},
           {"max_c_size", s.max_c_size},
           {"failures", s.failures},
           {"verdict", s.ok() ? "pass" : "fail"}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& line : s.failures) os << "mismatch U V n: " << line << '\n';
  os << "pairs " << s.pairs << " outside_mismatches " << s.outside_mismatches << " containment_violations "
     << s.containment_violations << " max_c_size " << s.max_c_size << " verdict " << (s.ok() ? "pass" : "fail")
     << '\n';
  return os.str();
}

std::string render(const ConstructionResult& r, Format f) {
  if (f == Format::structured) {
    json checks = json::object();
    for (const auto& [name, ok] : r.checks) checks[name] = ok;
    json j{{"header", r.header},
           {"checks", checks},
           {"window", {r.set.lo(), r.set.hi()}},
           {"runs", runs_json(r.set)}};
    return j.dump(2) + "\n";
  }
  std::vector<std::string> header = r.header;
  for (const auto& [name, ok] : r.checks) header.push_back("check " + name + " " + (ok ? "pass" : "fail"));
  return serialize_set(r.set, header);
}

}  // namespace hindlab
