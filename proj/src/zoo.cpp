#include "actalab/zoo.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

#include "actalab/error.hpp"

namespace actalab {

  char const* to_string(Family f) noexcept {
    switch (f) {
      case Family::CyclicGroup: return "cyclic_group";
      case Family::InverseOmegaChain: return "inverse_omega_chain";
      case Family::NullAdjoined: return "null_adjoined";
      case Family::SemilatticeOfGroups: return "semilattice_of_groups";
      case Family::NatMinAdjoined: return "nat_min_adjoined";
    }
    return "?";
  }

  Family parse_family(std::string const& name) {
    for (auto f : {Family::CyclicGroup, Family::InverseOmegaChain,
                   Family::NullAdjoined, Family::SemilatticeOfGroups,
                   Family::NatMinAdjoined}) {
      if (name == to_string(f)) {
        return f;
      }
    }
    throw Error(ErrorKind::BadParams, "unknown family \"" + name + "\"");
  }

  namespace {

    std::string power_label(std::string const& base, std::size_t k) {
      return k == 1 ? base : base + std::to_string(k);
    }

    std::string name_of(Family f, std::vector<std::size_t> const& params) {
      std::string out = std::string(to_string(f)) + "(";
      for (std::size_t i = 0; i < params.size(); ++i) {
        out += (i ? "," : "") + std::to_string(params[i]);
      }
      return out + ")";
    }

    // Arbitrary cap keeping tables small enough for exhaustive work.
    constexpr std::size_t max_order = 64;

  }  // namespace

  FiniteMonoid build(Family family, std::vector<std::size_t> const& params) {
    std::size_t const want = family == Family::SemilatticeOfGroups ? 2 : 1;
    if (params.size() != want) {
      throw Error(ErrorKind::BadParams,
                  std::string(to_string(family)) + " takes "
                      + std::to_string(want) + " parameter(s)");
    }
    std::size_t const n = params[0];
    bool const        zero_ok = family == Family::InverseOmegaChain;
    for (auto p : params) {
      if ((p == 0 && !zero_ok) || p > max_order) {
        throw Error(ErrorKind::BadParams,
                    "parameter " + std::to_string(p) + " out of range for "
                        + to_string(family));
      }
    }
    std::vector<std::string> labels;
    std::vector<Elem>        table;
    auto set = [&](std::size_t i, std::size_t j, std::size_t v) {
      table[i * labels.size() + j] = static_cast<Elem>(v);
    };
    switch (family) {
      case Family::CyclicGroup:
        labels.push_back("1");
        for (std::size_t k = 1; k < n; ++k) {
          labels.push_back(power_label("g", k));
        }
        table.resize(n * n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            set(i, j, (i + j) % n);
          }
        }
        break;
      case Family::InverseOmegaChain:
        for (std::size_t k = 0; k <= n; ++k) {
          labels.push_back("e" + std::to_string(k));
        }
        table.resize(labels.size() * labels.size());
        for (std::size_t i = 0; i <= n; ++i) {
          for (std::size_t j = 0; j <= n; ++j) {
            set(i, j, std::max(i, j));
          }
        }
        break;
      case Family::NullAdjoined:
        // index 0 = e, 1 = zero, 2.. = x1..
        labels = {"e", "0"};
        for (std::size_t k = 1; k < n; ++k) {
          labels.push_back("x" + std::to_string(k));
        }
        table.resize(labels.size() * labels.size());
        for (std::size_t i = 0; i < labels.size(); ++i) {
          for (std::size_t j = 0; j < labels.size(); ++j) {
            set(i, j, i == 0 ? j : (j == 0 ? i : 1));
          }
        }
        break;
      case Family::NatMinAdjoined:
        labels.push_back("e");
        for (std::size_t k = 1; k <= n; ++k) {
          labels.push_back(std::to_string(k));
        }
        table.resize(labels.size() * labels.size());
        for (std::size_t i = 0; i <= n; ++i) {
          for (std::size_t j = 0; j <= n; ++j) {
            set(i, j, i == 0 ? j : (j == 0 ? i : std::min(i, j)));
          }
        }
        break;
      case Family::SemilatticeOfGroups: {
        std::size_t const p = params[0], q = params[1];
        labels.push_back("e");
        for (std::size_t k = 1; k < p; ++k) {
          labels.push_back(power_label("a", k));
        }
        labels.push_back("f");
        for (std::size_t k = 1; k < q; ++k) {
          labels.push_back(power_label("b", k));
        }
        table.resize(labels.size() * labels.size());
        // G1 occupies 0..p-1, G0 occupies p..p+q-1
        for (std::size_t i = 0; i < p + q; ++i) {
          for (std::size_t j = 0; j < p + q; ++j) {
            bool hi = i < p, hj = j < p;
            if (hi && hj) {
              set(i, j, (i + j) % p);
            } else if (!hi && !hj) {
              set(i, j, p + ((i - p) + (j - p)) % q);
            } else {
              set(i, j, hi ? j : i);
            }
          }
        }
        break;
      }
    }
    return FiniteMonoid::validate(name_of(family, params), std::move(labels),
                                  std::move(table), 0);
  }

  std::optional<FiniteMonoid> build_from_expression(std::string const& text) {
    std::string t;
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) {
        t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      }
    }
    if (t == "trivial") {
      return build(Family::CyclicGroup, {1});
    }
    static std::regex const zn("z([0-9]+)");
    static std::regex const call("([a-z_]+)\\(([0-9]+)(?:,([0-9]+))?\\)");
    std::smatch             m;
    if (std::regex_match(t, m, zn)) {
      return build(Family::CyclicGroup, {std::stoul(m[1])});
    }
    if (!std::regex_match(t, m, call)) {
      return std::nullopt;
    }
    std::string name = m[1];
    if (name == "nat_min_trunc") {
      name = "nat_min_adjoined";
    }
    Family f;
    try {
      f = parse_family(name);
    } catch (Error const&) {
      return std::nullopt;
    }
    std::vector<std::size_t> params{std::stoul(m[2])};
    if (m[3].matched) {
      params.push_back(std::stoul(m[3]));
    }
    return build(f, params);
  }

  std::pair<Elem, Elem> designated_pair(Family family, FiniteMonoid const& M) {
    auto pick = [&](char const* s, char const* t) {
      return std::pair{M.index_of(s), M.index_of(t)};
    };
    std::size_t const n = M.size();
    switch (family) {
      case Family::CyclicGroup: return n >= 2 ? pick("1", "g") : pick("1", "1");
      case Family::InverseOmegaChain:
        return n >= 2 ? pick("e1", "e1") : pick("e0", "e0");
      case Family::NullAdjoined:
        // a single non-zero element forces s = t
        if (n >= 4) {
          return pick("x1", "x2");
        }
        return n == 3 ? pick("x1", "x1") : pick("0", "0");
      case Family::SemilatticeOfGroups: return pick("f", "e");
      case Family::NatMinAdjoined: return pick("1", "1");
    }
    return {0, 0};
  }

  char const* to_string(Trend t) noexcept {
    switch (t) {
      case Trend::Constant: return "constant";
      case Trend::StrictlyIncreasing: return "strictly increasing";
      case Trend::NonDecreasing: return "non-decreasing";
      case Trend::StrictlyDecreasing: return "strictly decreasing";
      case Trend::NonIncreasing: return "non-increasing";
      case Trend::Mixed: return "mixed";
    }
    return "?";
  }

  Trend trend_of(std::vector<std::size_t> const& v) {
    bool up = false, down = false, flat = false;
    for (std::size_t i = 1; i < v.size(); ++i) {
      up |= v[i] > v[i - 1];
      down |= v[i] < v[i - 1];
      flat |= v[i] == v[i - 1];
    }
    if (up && down) {
      return Trend::Mixed;
    }
    if (up) {
      return flat ? Trend::NonDecreasing : Trend::StrictlyIncreasing;
    }
    if (down) {
      return flat ? Trend::NonIncreasing : Trend::StrictlyDecreasing;
    }
    return Trend::Constant;
  }

  FamilyReport family_report(Family                     family,
                             std::size_t                lo,
                             std::size_t                hi,
                             std::optional<std::string> s_label,
                             std::optional<std::string> t_label) {
    if (lo > hi) {
      throw Error(ErrorKind::BadParams, "empty parameter range");
    }
    FamilyReport report;
    report.family = family;
    std::vector<std::size_t> Rs, rs, meets;
    for (std::size_t n = lo; n <= hi; ++n) {
      auto M = family == Family::SemilatticeOfGroups ? build(family, {n, n})
                                                     : build(family, {n});
      auto [s, t] = designated_pair(family, M);
      if (s_label) {
        s = M.index_of(*s_label);
      }
      if (t_label) {
        t = M.index_of(*t_label);
      }
      FamilyRow row;
      row.n               = n;
      row.monoid          = M.name();
      row.s               = M.label(s);
      row.t               = M.label(t);
      row.R_generators    = min_generating_set(M, R_set(M, s, t)).size();
      row.r_generators    = min_generating_set(M, r_set(M, s, t)).size();
      row.meet_generators
          = min_generating_set(M, ideal_intersection(M, s, t)).size();
      Rs.push_back(row.R_generators);
      rs.push_back(row.r_generators);
      meets.push_back(row.meet_generators);
      report.rows.push_back(std::move(row));
    }
    report.R_trend    = trend_of(Rs);
    report.r_trend    = trend_of(rs);
    report.meet_trend = trend_of(meets);
    return report;
  }

  std::vector<std::pair<std::string, std::string>> excluded_families() {
    return {{"bicyclic_max_product",
             "the monoid on Z x Z with an adjoined identity is infinite and "
             "no finite truncation is closed under its multiplication"}};
  }

}  // namespace actalab
