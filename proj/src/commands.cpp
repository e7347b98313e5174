#include "liegrad/commands.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

namespace liegrad {

using nlohmann::ordered_json;
using reference::Erratum;

namespace {

ordered_json to_json(const Root& r) {
  ordered_json a = ordered_json::array();
  for (int c : r) a.push_back(c);
  return a;
}

ordered_json to_json(const Sigma& s) {
  ordered_json a = ordered_json::array();
  for (int i : s.indices) a.push_back(i);
  return a;
}

ordered_json to_json(const ReductiveDescription& d) {
  ordered_json factors = ordered_json::array();
  for (const auto& f : d.factors) factors.push_back(to_string(f));
  return ordered_json{{"center_dim", d.center_dim},
                      {"factors", factors},
                      {"total_dim", d.total_dim},
                      {"display", to_string(d)}};
}

ordered_json to_json(const std::vector<long long>& v) {
  ordered_json a = ordered_json::array();
  for (long long x : v) a.push_back(x);
  return a;
}

ordered_json to_json(const DimTriple& d) { return ordered_json::array({d[0], d[1], d[2]}); }

ordered_json to_json(const RelationStatus& st) {
  return ordered_json{
      {"equation", st.equation}, {"holds_at_r", st.holds_at_r}, {"solvable", st.solvable}};
}

ordered_json to_json(const DiophantineReport& rep) {
  return ordered_json{{"dims", to_json(rep.dims)},
                      {"r", rep.r},
                      {"witt_depth2", rep.witt_depth2},
                      {"witt_depth3", rep.witt_depth3},
                      {"printed", to_json(rep.printed)},
                      {"corrected", to_json(rep.corrected)},
                      {"printed_matches_corrected", rep.printed_matches_corrected},
                      {"not_free", rep.not_free}};
}

std::string pair_display(const std::pair<Root, Root>& p) {
  return to_string(p.first) + "+" + to_string(p.second);
}

Sigma parse_sigma_csv(const std::string& csv, int rank) {
  std::vector<int> idx;
  std::string cur;
  std::stringstream ss(csv);
  while (std::getline(ss, cur, ',')) {
    if (cur.empty() || cur.size() > 6)
      throw input_error("cannot parse sigma entry '" + cur + "'");
    for (char ch : cur)
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw input_error("cannot parse sigma entry '" + cur + "'");
    idx.push_back(std::stoi(cur));
  }
  if (idx.empty()) throw input_error("empty sigma list");
  return make_sigma(idx, rank);
}

std::vector<SimpleLieType> family_types(const std::string& families, int max_rank) {
  if (max_rank < 1) throw input_error("max-rank must be >= 1");
  if (max_rank > 1000) throw input_error("max-rank too large");
  std::string letters;
  if (families == "all" || families == "ALL") {
    letters = "ABCDEFG";
  } else {
    for (char ch : families) {
      char u = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
      if (std::string("ABCDEFG").find(u) == std::string::npos)
        throw input_error("unknown family letter '" + std::string(1, ch) + "'");
      if (letters.find(u) == std::string::npos) letters += u;
    }
    std::sort(letters.begin(), letters.end());
  }
  std::vector<SimpleLieType> types;
  for (char f : letters) {
    auto fam = static_cast<Family>(f);
    for (int r = 1; r <= max_rank; ++r)
      if (valid_rank(fam, r)) types.push_back({fam, r});
  }
  return types;
}

// One fully-described grading row shared by the gradings/free commands.
ordered_json grading_row(const RootSystem& rs, const SigmaClass& cls, int k, bool dedupe,
                         bool with_freeness, std::vector<Erratum>& errata) {
  const Sigma& rep = cls.representative();
  GradingDims gd = graded_dimensions(rs, rep, k);
  ReductiveDescription levi = levi_structure(rs.type, rep);
  if (reductive_dimension(levi) != gd.dim_n0)
    throw internal_error("reductive dimension disagrees with root counting for " +
                         to_string(rs.type) + " " + to_string(rep));

  ordered_json row;
  row["sigma"] = to_json(rep);
  if (dedupe) {
    ordered_json orbit = ordered_json::array();
    for (const Sigma& s : cls.members) orbit.push_back(to_json(s));
    row["orbit"] = orbit;
  } else {
    row["class_rep"] = to_json(rep);
  }
  row["neg_dims"] = to_json(gd.neg_dims);
  row["dim_n0"] = gd.dim_n0;
  row["levi"] = to_json(levi);

  if (!with_freeness) return row;

  FreenessVerdict v = freeness_check(rs, gd);
  row["r"] = v.r;
  row["witt_expected"] = to_json(v.expected);
  row["free"] = v.free;
  row["reason"] = to_string(v.reason);
  row["generated"] = generation_check(rs, rep, k);
  if (k >= 2) {
    auto pair = commuting_pair(rs, rep);
    row["commuting_pair"] = pair ? ordered_json{to_json(pair->first), to_json(pair->second)}
                                 : ordered_json(nullptr);
    if (v.free && pair)
      throw internal_error("free verdict with a commuting pair for " + to_string(rs.type));
  } else {
    row["commuting_pair"] = nullptr;
  }

  const auto& ix = rep.indices;
  int n = rs.rank();
  if (rs.type.family == Family::A && k == 3 && ix.size() == 3) {
    MatrixCertificate c = an_matrix_certificate(n, ix[0], ix[1], ix[2]);
    row["certificate"] = ordered_json{{"x", ordered_json{c.x.first, c.x.second}},
                                      {"y", ordered_json{c.y.first, c.y.second}},
                                      {"case_zero", c.case_zero},
                                      {"in_block", c.in_block},
                                      {"product_check", c.product_check}};
  } else {
    row["certificate"] = nullptr;
  }

  if (k == 3) {
    long long constant = 3 * (algebra_dim(rs.type) - gd.dim_n0);
    auto solutions = cubic_filter(algebra_dim(rs.type), gd.dim_n0);
    row["cubic"] = ordered_json{
        {"constant", constant}, {"solutions", to_json(solutions)}};
    if (auto published = reference::published_cubic_constant(rs.type, rep);
        published && *published != constant)
      errata.push_back({"cubic:" + to_string(rs.type) + " sigma=" + to_string(rep),
                        std::to_string(*published), std::to_string(constant),
                        "published cubic constant disagrees with 3(dim g - dim n0)"});
  } else {
    row["cubic"] = nullptr;
  }

  row["diophantine"] = nullptr;
  if (k == 3) {
    std::optional<DiophantineReport> rep_dio;
    if (rs.type.family == Family::B)
      rep_dio = diophantine_witness(Family::B, DnVariant::none, n, ix[1]);
    else if (rs.type.family == Family::C)
      rep_dio = diophantine_witness(Family::C, DnVariant::none, n, ix[0]);
    else if (rs.type.family == Family::D) {
      if (ix.size() == 3)
        rep_dio = diophantine_witness(Family::D, DnVariant::first_and_fork, n, 0);
      else if (ix[0] == 1)
        rep_dio = diophantine_witness(Family::D, DnVariant::first_and_i, n, ix[1]);
      else
        rep_dio = diophantine_witness(Family::D, DnVariant::i_and_last, n, ix[0]);
    }
    if (rep_dio) row["diophantine"] = to_json(*rep_dio);
  }
  return row;
}

void append_e7_levi_erratum(const SimpleLieType& t, const Sigma& rep,
                            std::vector<Erratum>& errata) {
  if (t == SimpleLieType{Family::E, 7} && rep == Sigma{{5}}) {
    const auto& standing = reference::standing_errata();
    errata.push_back(standing[0]);
  }
}

}  // namespace

Envelope cmd_roots(const std::string& type_str) {
  SimpleLieType t = parse_type(type_str);
  RootSystem rs = build_root_system(t);
  Envelope e;
  e.command = "roots";
  e.inputs = ordered_json{{"type", to_string(t)}};
  ordered_json roots = ordered_json::array();
  for (const Root& r : rs.positive_roots) roots.push_back(to_json(r));
  e.results = ordered_json{{"count", rs.positive_roots.size()},
                           {"positive_roots", roots},
                           {"highest_root", to_json(rs.highest_root)}};
  return e;
}

Envelope cmd_gradings(const std::string& type_str, int k, bool dedupe) {
  SimpleLieType t = parse_type(type_str);
  RootSystem rs = build_root_system(t);
  auto sigmas = enumerate_sigmas(rs, k);
  auto classes = dedupe_sigmas(rs, sigmas);

  Envelope e;
  e.command = "gradings";
  e.inputs = ordered_json{{"type", to_string(t)}, {"k", k}, {"dedupe", dedupe}};
  ordered_json rows = ordered_json::array();
  if (dedupe) {
    for (const auto& cls : classes) rows.push_back(grading_row(rs, cls, k, true, false, e.errata));
  } else {
    std::map<Sigma, Sigma> rep_of;
    for (const auto& cls : classes)
      for (const Sigma& s : cls.members) rep_of.emplace(s, cls.representative());
    for (const Sigma& s : sigmas) {
      SigmaClass singleton{{s}};
      ordered_json row = grading_row(rs, singleton, k, false, false, e.errata);
      row["class_rep"] = to_json(rep_of.at(s));
      rows.push_back(row);
    }
  }
  e.results = ordered_json{{"count", rows.size()}, {"gradings", rows}};
  return e;
}

Envelope cmd_dims(const std::string& type_str, const std::string& sigma_csv, int k) {
  SimpleLieType t = parse_type(type_str);
  RootSystem rs = build_root_system(t);
  Sigma sigma = parse_sigma_csv(sigma_csv, t.rank);
  GradingDims gd = graded_dimensions(rs, sigma, k);

  Envelope e;
  e.command = "dims";
  e.inputs = ordered_json{{"type", to_string(t)}, {"sigma", to_json(sigma)}, {"k", k}};
  long long sum = 0;
  for (long long d : gd.neg_dims) sum += d;
  bool audit = algebra_dim(t) == gd.dim_n0 + 2 * sum;
  if (!audit) throw internal_error("dimension audit failed for " + to_string(t));
  e.results = ordered_json{{"neg_dims", to_json(gd.neg_dims)},
                           {"dim_n0", gd.dim_n0},
                           {"ht0_root_count", gd.ht0_root_count},
                           {"dim_algebra", algebra_dim(t)},
                           {"dim_audit_ok", audit}};

  e.results["closed_form"] = nullptr;
  if (k == 3 && (t.family == Family::A || t.family == Family::B || t.family == Family::C ||
                 t.family == Family::D)) {
    ClosedFormDims cf = closed_form_dims(t, sigma);
    DimTriple enumerated{gd.neg_dims[0], gd.neg_dims[1], gd.neg_dims[2]};
    if (cf.corrected != enumerated)
      throw internal_error("corrected closed form disagrees with enumeration for " +
                           to_string(t) + " " + to_string(sigma));
    e.results["closed_form"] =
        ordered_json{{"published", to_json(cf.published)},
                     {"corrected", to_json(cf.corrected)}};
    for (int depth = 1; depth <= 3; ++depth)
      if (cf.published[depth - 1] != cf.corrected[depth - 1]) {
        int i = t.family == Family::B ? sigma.indices[1] : sigma.indices[0];
        e.errata.push_back({"closed_form:" + std::string(1, static_cast<char>(t.family)) +
                                " n=" + std::to_string(t.rank) + " i=" + std::to_string(i) +
                                " depth=" + std::to_string(depth),
                            std::to_string(cf.published[depth - 1]),
                            std::to_string(cf.corrected[depth - 1]),
                            "published closed form disagrees with root enumeration"});
      }
  }
  return e;
}

Envelope cmd_levi(const std::string& type_str, const std::string& sigma_csv) {
  SimpleLieType t = parse_type(type_str);
  Sigma sigma = parse_sigma_csv(sigma_csv, t.rank);
  ReductiveDescription d = levi_structure(t, sigma);
  Envelope e;
  e.command = "levi";
  e.inputs = ordered_json{{"type", to_string(t)}, {"sigma", to_json(sigma)}};
  e.results = to_json(d);
  append_e7_levi_erratum(t, sigma, e.errata);
  return e;
}

Envelope cmd_free(const std::string& type_str, int k, const std::string& sigma_csv) {
  SimpleLieType t = parse_type(type_str);
  RootSystem rs = build_root_system(t);

  Envelope e;
  e.command = "free";
  std::vector<SigmaClass> classes;
  ordered_json sigma_echo(nullptr);
  if (!sigma_csv.empty()) {
    Sigma s = parse_sigma_csv(sigma_csv, t.rank);
    sigma_echo = to_json(s);
    classes.push_back(SigmaClass{{s}});
  } else {
    classes = dedupe_sigmas(rs, enumerate_sigmas(rs, k));
  }
  e.inputs = ordered_json{{"type", to_string(t)}, {"k", k}, {"sigma", sigma_echo}};

  ordered_json rows = ordered_json::array();
  long long free_count = 0;
  ordered_json free_entries = ordered_json::array();
  for (const auto& cls : classes) {
    ordered_json row = grading_row(rs, cls, k, true, true, e.errata);
    if (row["free"].get<bool>()) {
      ++free_count;
      free_entries.push_back(ordered_json{{"type", to_string(t)},
                                          {"sigma", row["sigma"]},
                                          {"r", row["r"]}});
    }
    append_e7_levi_erratum(t, cls.representative(), e.errata);
    rows.push_back(std::move(row));
  }
  e.results = ordered_json{{"gradings", rows},
                           {"summary", ordered_json{{"free_count", free_count},
                                                    {"free_entries", free_entries}}}};
  return e;
}

Envelope cmd_scan(const std::string& families, int max_rank, int k) {
  auto types = family_types(families, max_rank);
  auto entries = scan(types, k);

  Envelope e;
  e.command = "scan";
  e.inputs = ordered_json{{"families", families}, {"max_rank", max_rank}, {"k", k}};
  ordered_json rows = ordered_json::array();
  long long free_count = 0;
  ordered_json free_entries = ordered_json::array();
  for (const auto& entry : entries) {
    ordered_json row;
    row["type"] = to_string(entry.type);
    row["sigma"] = to_json(entry.cls.representative());
    row["orbit_size"] = entry.cls.members.size();
    row["neg_dims"] = to_json(entry.dims.neg_dims);
    row["dim_n0"] = entry.dims.dim_n0;
    row["levi"] = to_string(entry.levi);
    row["free"] = entry.verdict.free;
    row["reason"] = to_string(entry.verdict.reason);
    row["r"] = entry.verdict.r;
    row["commuting_pair"] = entry.pair ? ordered_json(pair_display(*entry.pair))
                                       : ordered_json(nullptr);
    if (entry.verdict.free) {
      ++free_count;
      free_entries.push_back(ordered_json{{"type", to_string(entry.type)},
                                          {"sigma", to_json(entry.cls.representative())},
                                          {"r", entry.verdict.r}});
    }
    rows.push_back(std::move(row));
  }
  std::string summary = "free: " + std::to_string(free_count);
  for (const auto& fe : free_entries) {
    Sigma s{{}};
    for (const auto& v : fe["sigma"]) s.indices.push_back(v.get<int>());
    summary += " (" + fe["type"].get<std::string>() + " " + to_string(s) + " r=" +
               std::to_string(fe["r"].get<long long>()) + ")";
  }
  e.results = ordered_json{{"entries", rows},
                           {"summary", ordered_json{{"free_count", free_count},
                                                    {"free_entries", free_entries},
                                                    {"line", summary}}}};
  return e;
}

namespace {

// The published symbolic reductive-part rows for the classical families, with
// their side conditions; each row is verified over every matching sigma, rank <= 12.
struct ClassicalLeviRow {
  Family family;
  std::string pattern;
  std::string n0;
  // enumerate matching sigmas for rank n; empty if none
  std::function<std::vector<Sigma>(int n)> instances;
};

const std::vector<ClassicalLeviRow>& classical_levi_rows() {
  auto sig = [](std::initializer_list<int> l) { return Sigma{std::vector<int>(l)}; };
  static const std::vector<ClassicalLeviRow> rows = {
      {Family::A, "{a1,a2,a3} / {a1,a2,an}", "C^3+A(n-3)",
       [sig](int n) {
         std::vector<Sigma> v;
         if (n >= 3) v.push_back(sig({1, 2, 3}));
         if (n >= 4) v.push_back(sig({1, 2, n}));
         return v;
       }},
      {Family::A, "{ai,ai+1,ai+2}, 2<=i<n-3", "C^3+A(i-1)+A(n-i-2)",
       [](int n) {
         std::vector<Sigma> v;
         for (int i = 2; i < n - 3; ++i) v.push_back(Sigma{{i, i + 1, i + 2}});
         return v;
       }},
      {Family::A, "{ai,ai+1,ak}, 2<=i<=n-3, |k-(i+1)|>1, i<k<=n-1", "C^3+A(i-1)+A(k-i-2)+A(n-k)",
       [](int n) {
         std::vector<Sigma> v;
         for (int i = 2; i <= n - 3; ++i)
           for (int k = i + 1; k <= n - 1; ++k)
             if (std::abs(k - (i + 1)) > 1) v.push_back(Sigma{{i, i + 1, k}});
         return v;
       }},
      {Family::A, "{ai,ai+1,an}, 1<i<n-1", "C^3+A(i-1)+A(n-i-2)",
       [](int n) {
         std::vector<Sigma> v;
         for (int i = 2; i < n - 1 && i + 1 < n; ++i) v.push_back(Sigma{{i, i + 1, n}});
         return v;
       }},
      {Family::A, "{ai,aj,ak}, j-i>1, k-j>1, k<=n-1", "C^3+A(i-1)+A(j-i-1)+A(k-j-1)+A(n-k)",
       [](int n) {
         std::vector<Sigma> v;
         for (int i = 1; i <= n; ++i)
           for (int j = i + 2; j <= n; ++j)
             for (int k = j + 2; k <= n - 1; ++k) v.push_back(Sigma{{i, j, k}});
         return v;
       }},
      {Family::A, "{ai,aj,an}, 1<i<j<n-1", "C^3+A(i-1)+A(j-i-1)+A(n-j-1)",
       [](int n) {
         std::vector<Sigma> v;
         for (int i = 2; i < n - 1; ++i)
           for (int j = i + 2; j < n - 1; ++j) v.push_back(Sigma{{i, j, n}});
         return v;
       }},
      {Family::B, "{a1,a2}", "C^2+B(n-2)",
       [sig](int n) { return std::vector<Sigma>{sig({1, 2})}; }},
      {Family::B, "{a1,ai}, 3<=i<=n-2", "C^2+A(i-2)+B(n-i)",
       [](int n) {
         std::vector<Sigma> v;
         for (int i = 3; i <= n - 2; ++i) v.push_back(Sigma{{1, i}});
         return v;
       }},
      {Family::B, "{a1,a(n-1)}", "C^2+A(n-3)+A1",
       [sig](int n) {
         return n >= 3 ? std::vector<Sigma>{sig({1, n - 1})} : std::vector<Sigma>{};
       }},
      {Family::B, "{a1,an}", "C^2+A(n-2)",
       [sig](int n) { return std::vector<Sigma>{sig({1, n})}; }},
      {Family::C, "{a1,an} / {a(n-1),an}", "C^2+A(n-2)",
       [sig](int n) { return std::vector<Sigma>{sig({1, n}), sig({n - 1, n})}; }},
      {Family::C, "{ai,an}, 2<=i<=n-2", "C^2+A(i-1)+A(n-i-1)",
       [](int n) {
         std::vector<Sigma> v;
         for (int i = 2; i <= n - 2; ++i) v.push_back(Sigma{{i, n}});
         return v;
       }},
      {Family::D, "{a1,ai}, 2<=i<=n-3", "C^2+A(i-2)+D(n-i)",
       [](int n) {
         std::vector<Sigma> v;
         for (int i = 2; i <= n - 3; ++i) v.push_back(Sigma{{1, i}});
         return v;
       }},
      {Family::D, "{a1,a(n-2)}", "C^2+A(n-4)+A1+A1",
       [sig](int n) { return std::vector<Sigma>{sig({1, n - 2})}; }},
      {Family::D, "{ai,a(n-1)}, 2<=i<=n-3", "C^2+A(i-1)+A(n-i-1)",
       [](int n) {
         std::vector<Sigma> v;
         for (int i = 2; i <= n - 3; ++i) v.push_back(Sigma{{i, n - 1}});
         return v;
       }},
      {Family::D, "{a(n-2),a(n-1)}", "C^2+A1+A(n-3)",
       [sig](int n) { return std::vector<Sigma>{sig({n - 2, n - 1})}; }},
      {Family::D, "{a1,a(n-1),an}", "C^3+A(n-3)",
       [sig](int n) { return std::vector<Sigma>{sig({1, n - 1, n})}; }},
  };
  return rows;
}

int family_min_rank(Family f) {
  for (int r = 1;; ++r)
    if (valid_rank(f, r)) return r;
}

}  // namespace

Envelope cmd_tables() {
  Envelope e;
  e.command = "tables";
  e.inputs = ordered_json::object();

  // highest roots, nine families at representative ranks
  ordered_json highest = ordered_json::array();
  const std::vector<SimpleLieType> reps = {{Family::A, 5}, {Family::B, 5}, {Family::C, 5},
                                           {Family::D, 5}, {Family::E, 6}, {Family::E, 7},
                                           {Family::E, 8}, {Family::F, 4}, {Family::G, 2}};
  for (const auto& t : reps) {
    RootSystem rs = build_root_system(t);
    Root expected = reference::highest_root_pattern(t);
    highest.push_back(ordered_json{{"type", to_string(t)},
                                   {"published", to_json(expected)},
                                   {"computed", to_json(rs.highest_root)},
                                   {"match", expected == rs.highest_root}});
  }
  e.results["highest_roots"] = highest;

  // exceptional |3|-grading dimensions
  ordered_json exc = ordered_json::array();
  for (const auto& row : reference::exceptional_gradings()) {
    RootSystem rs = build_root_system(row.type);
    GradingDims gd = graded_dimensions(rs, row.sigma, 3);
    DimTriple computed{gd.neg_dims[0], gd.neg_dims[1], gd.neg_dims[2]};
    exc.push_back(ordered_json{
        {"type", to_string(row.type)},
        {"sigma", to_json(row.sigma)},
        {"published", to_json(row.published_dims)},
        {"computed", to_json(computed)},
        {"match", computed == row.published_dims}});
    if (computed != row.published_dims) {
      auto triple = [](const DimTriple& d) {
        return "(" + std::to_string(d[0]) + "," + std::to_string(d[1]) + "," +
               std::to_string(d[2]) + ")";
      };
      e.errata.push_back(
          {"grading_dims:" + to_string(row.type) + " sigma=" + to_string(row.sigma),
           triple(row.published_dims), triple(computed),
           "published depth-1/2 dimensions disagree with root enumeration"});
    }
  }
  e.results["exceptional_gradings"] = exc;

  // reductive parts: classical case rows, instances verified for ranks <= 12
  ordered_json levi_rows = ordered_json::array();
  for (const auto& row : classical_levi_rows()) {
    long long instances = 0;
    bool all_match = true;
    for (int n = family_min_rank(row.family); n <= 12; ++n) {
      SimpleLieType t{row.family, n};
      for (const Sigma& s : row.instances(n)) {
        ReductiveDescription actual = levi_structure(t, s);
        ReductiveDescription expected = reference::classical_levi_expected(t, s);
        ++instances;
        all_match &= actual.center_dim == expected.center_dim &&
                     actual.factors == expected.factors;
      }
    }
    levi_rows.push_back(ordered_json{{"family", std::string(1, static_cast<char>(row.family))},
                                     {"sigma_pattern", row.pattern},
                                     {"n0", row.n0},
                                     {"instances_rank_le_12", instances},
                                     {"match", all_match}});
  }
  e.results["levi_classical"] = levi_rows;

  // reductive parts: the thirteen exceptional rows
  ordered_json levi_exc = ordered_json::array();
  for (const auto& row : reference::exceptional_levi_rows()) {
    ReductiveDescription actual = levi_structure(row.type, row.sigma);
    bool match = actual.center_dim == row.center_dim && actual.factors == row.factors;
    ReductiveDescription published{row.center_dim, row.factors, 0};
    published.total_dim = reductive_dimension(published);
    levi_exc.push_back(ordered_json{{"type", to_string(row.type)},
                                    {"sigma", to_json(row.sigma)},
                                    {"published", to_string(published)},
                                    {"computed", to_string(actual)},
                                    {"match", match}});
  }
  e.results["levi_exceptional"] = levi_exc;

  // classical dimension closed forms, ranks <= 8, with cell annotations
  ordered_json forms = ordered_json::array();
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int n = family_min_rank(f); n <= 8; ++n) {
      SimpleLieType t{f, n};
      RootSystem rs = build_root_system(t);
      for (const Sigma& s : enumerate_sigmas(rs, 3)) {
        ClosedFormDims cf = closed_form_dims(t, s);
        GradingDims gd = graded_dimensions(rs, s, 3);
        DimTriple en{gd.neg_dims[0], gd.neg_dims[1], gd.neg_dims[2]};
        ordered_json flagged = ordered_json::array();
        for (int depth = 1; depth <= 3; ++depth)
          if (cf.published[depth - 1] != cf.corrected[depth - 1]) flagged.push_back(depth);
        forms.push_back(ordered_json{
            {"type", to_string(t)},
            {"sigma", to_json(s)},
            {"published", to_json(cf.published)},
            {"corrected", to_json(cf.corrected)},
            {"enumerated", to_json(en)},
            {"flagged_depths", flagged}});
        if (cf.corrected != en)
          throw internal_error("corrected closed form disagrees with enumeration for " +
                               to_string(t) + " " + to_string(s));
      }
      if (f == Family::B || f == Family::C)
        for (auto& er : reference::closed_form_errata(t)) e.errata.push_back(er);
    }
  }
  e.results["classical_dim_forms"] = forms;

  // cubic constants for the exceptional classes
  ordered_json cubic = ordered_json::array();
  for (const auto& row : reference::exceptional_gradings()) {
    RootSystem rs = build_root_system(row.type);
    GradingDims gd = graded_dimensions(rs, row.sigma, 3);
    long long constant = 3 * (algebra_dim(row.type) - gd.dim_n0);
    auto solutions = cubic_filter(algebra_dim(row.type), gd.dim_n0);
    auto published = reference::published_cubic_constant(row.type, row.sigma);
    cubic.push_back(ordered_json{
        {"type", to_string(row.type)},
        {"sigma", to_json(row.sigma)},
        {"published", published ? ordered_json(*published) : ordered_json(nullptr)},
        {"computed", constant},
        {"solutions", to_json(solutions)},
        {"match", published && *published == constant}});
  }
  e.results["cubic_constants"] = cubic;

  for (const auto& er : reference::standing_errata()) e.errata.push_back(er);
  return e;
}

// ---------------------------------------------------------------------------
// rendering

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string join_csv(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += csv_escape(fields[i]);
  }
  return line + "\n";
}

std::string dims_str(const ordered_json& arr) {
  std::string s;
  for (const auto& v : arr) {
    if (!s.empty()) s += ',';
    s += std::to_string(v.get<long long>());
  }
  return s;
}

std::string root_str(const ordered_json& arr) {
  std::string s = "(";
  bool first = true;
  for (const auto& v : arr) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(v.get<long long>());
  }
  return s + ")";
}

std::string sigma_str(const ordered_json& arr) {
  std::string s = "{";
  bool first = true;
  for (const auto& v : arr) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(v.get<long long>());
  }
  return s + "}";
}

std::string orbit_str(const ordered_json& orbit) {
  std::string s;
  for (const auto& member : orbit) {
    if (!s.empty()) s += '~';
    s += sigma_str(member);
  }
  return s;
}

std::string bool_str(bool b) { return b ? "yes" : "no"; }

// column-aligned plain text
std::string format_columns(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (row.size() > width.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string errata_table(const std::vector<Erratum>& errata) {
  if (errata.empty()) return "";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"erratum", "published", "computed", "note"});
  for (const auto& er : errata) rows.push_back({er.location, er.published, er.computed, er.note});
  return "\nerrata\n" + format_columns(rows);
}

std::string pair_cell(const ordered_json& p) {
  if (p.is_null()) return "-";
  if (p.is_string()) return p.get<std::string>();
  return root_str(p[0]) + "+" + root_str(p[1]);
}

std::string grading_header_suffix(const Envelope& e) {
  std::string s = e.inputs["type"].get<std::string>() + "  k=" +
                  std::to_string(e.inputs["k"].get<int>());
  return s;
}

std::string render_table(const Envelope& e) {
  std::ostringstream out;
  const auto& r = e.results;
  if (e.command == "roots") {
    out << "roots " << e.inputs["type"].get<std::string>() << "\n";
    out << "count " << r["count"].get<long long>() << "\n";
    for (const auto& root : r["positive_roots"]) out << root_str(root) << "\n";
    out << "highest " << root_str(r["highest_root"]) << "\n";
  } else if (e.command == "gradings") {
    out << "gradings " << grading_header_suffix(e)
        << "  dedupe=" << bool_str(e.inputs["dedupe"].get<bool>()) << "\n";
    std::vector<std::vector<std::string>> rows;
    bool dedupe = e.inputs["dedupe"].get<bool>();
    rows.push_back({"sigma", dedupe ? "orbit" : "class", "neg_dims", "dim_n0", "n0"});
    for (const auto& g : r["gradings"])
      rows.push_back({sigma_str(g["sigma"]),
                      dedupe ? orbit_str(g["orbit"]) : sigma_str(g["class_rep"]),
                      dims_str(g["neg_dims"]), std::to_string(g["dim_n0"].get<long long>()),
                      g["levi"]["display"].get<std::string>()});
    out << format_columns(rows);
  } else if (e.command == "dims") {
    out << "dims " << e.inputs["type"].get<std::string>() << "  sigma="
        << sigma_str(e.inputs["sigma"]) << "  k=" << e.inputs["k"].get<int>() << "\n";
    out << "neg_dims " << dims_str(r["neg_dims"]) << "\n";
    out << "dim_n0 " << r["dim_n0"].get<long long>() << "\n";
    out << "ht0_root_count " << r["ht0_root_count"].get<long long>() << "\n";
    out << "dim_algebra " << r["dim_algebra"].get<long long>() << " audit "
        << (r["dim_audit_ok"].get<bool>() ? "ok" : "FAILED") << "\n";
    if (!r["closed_form"].is_null()) {
      out << "closed_form published " << dims_str(r["closed_form"]["published"]) << "\n";
      out << "closed_form corrected " << dims_str(r["closed_form"]["corrected"]) << "\n";
    }
  } else if (e.command == "levi") {
    out << "levi " << e.inputs["type"].get<std::string>() << "  sigma="
        << sigma_str(e.inputs["sigma"]) << "\n";
    out << "center_dim " << r["center_dim"].get<int>() << "\n";
    out << "n0 " << r["display"].get<std::string>() << "\n";
    out << "total_dim " << r["total_dim"].get<long long>() << "\n";
  } else if (e.command == "free") {
    out << "free " << grading_header_suffix(e) << "\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"sigma", "neg_dims", "r", "witt(r)", "free", "reason", "pair", "cubic"});
    for (const auto& g : r["gradings"]) {
      std::string cubic = "-";
      if (!g["cubic"].is_null()) {
        cubic = "2r^3+3r^2+r=" + std::to_string(g["cubic"]["constant"].get<long long>()) +
                " -> ";
        cubic += g["cubic"]["solutions"].empty() ? "none" : dims_str(g["cubic"]["solutions"]);
      }
      rows.push_back({sigma_str(g["sigma"]), dims_str(g["neg_dims"]),
                      std::to_string(g["r"].get<long long>()), dims_str(g["witt_expected"]),
                      bool_str(g["free"].get<bool>()), g["reason"].get<std::string>(),
                      pair_cell(g["commuting_pair"]), cubic});
    }
    out << format_columns(rows);
    out << "free: " << r["summary"]["free_count"].get<long long>() << "\n";
  } else if (e.command == "scan") {
    out << "scan families=" << e.inputs["families"].get<std::string>()
        << " max_rank=" << e.inputs["max_rank"].get<int>() << " k=" << e.inputs["k"].get<int>()
        << "\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"type", "sigma", "orbit", "neg_dims", "dim_n0", "n0", "free", "reason",
                    "pair"});
    for (const auto& g : r["entries"])
      rows.push_back({g["type"].get<std::string>(), sigma_str(g["sigma"]),
                      std::to_string(g["orbit_size"].get<long long>()), dims_str(g["neg_dims"]),
                      std::to_string(g["dim_n0"].get<long long>()), g["levi"].get<std::string>(),
                      bool_str(g["free"].get<bool>()), g["reason"].get<std::string>(),
                      pair_cell(g["commuting_pair"])});
    out << format_columns(rows);
    out << r["summary"]["line"].get<std::string>() << "\n";
  } else if (e.command == "tables") {
    out << "highest_roots\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"type", "published", "computed", "match"});
    for (const auto& g : r["highest_roots"])
      rows.push_back({g["type"].get<std::string>(), root_str(g["published"]),
                      root_str(g["computed"]), bool_str(g["match"].get<bool>())});
    out << format_columns(rows);

    out << "\nexceptional_gradings\n";
    rows.assign({{"type", "sigma", "published", "computed", "match"}});
    for (const auto& g : r["exceptional_gradings"])
      rows.push_back({g["type"].get<std::string>(), sigma_str(g["sigma"]),
                      dims_str(g["published"]), dims_str(g["computed"]),
                      bool_str(g["match"].get<bool>())});
    out << format_columns(rows);

    out << "\nlevi_classical\n";
    rows.assign({{"family", "sigma_pattern", "n0", "instances<=12", "match"}});
    for (const auto& g : r["levi_classical"])
      rows.push_back({g["family"].get<std::string>(), g["sigma_pattern"].get<std::string>(),
                      g["n0"].get<std::string>(),
                      std::to_string(g["instances_rank_le_12"].get<long long>()),
                      bool_str(g["match"].get<bool>())});
    out << format_columns(rows);

    out << "\nlevi_exceptional\n";
    rows.assign({{"type", "sigma", "published", "computed", "match"}});
    for (const auto& g : r["levi_exceptional"])
      rows.push_back({g["type"].get<std::string>(), sigma_str(g["sigma"]),
                      g["published"].get<std::string>(), g["computed"].get<std::string>(),
                      bool_str(g["match"].get<bool>())});
    out << format_columns(rows);

    out << "\nclassical_dim_forms (ranks <= 8)\n";
    rows.assign({{"type", "sigma", "published", "corrected", "enumerated", "flagged_depths"}});
    for (const auto& g : r["classical_dim_forms"])
      rows.push_back({g["type"].get<std::string>(), sigma_str(g["sigma"]),
                      dims_str(g["published"]), dims_str(g["corrected"]),
                      dims_str(g["enumerated"]),
                      g["flagged_depths"].empty() ? "-" : dims_str(g["flagged_depths"])});
    out << format_columns(rows);

    out << "\ncubic_constants\n";
    rows.assign({{"type", "sigma", "published", "computed", "solutions", "match"}});
    for (const auto& g : r["cubic_constants"])
      rows.push_back({g["type"].get<std::string>(), sigma_str(g["sigma"]),
                      g["published"].is_null() ? "-"
                                               : std::to_string(g["published"].get<long long>()),
                      std::to_string(g["computed"].get<long long>()),
                      g["solutions"].empty() ? "none" : dims_str(g["solutions"]),
                      bool_str(g["match"].get<bool>())});
    out << format_columns(rows);
  }
  out << errata_table(e.errata);
  return out.str();
}

std::string render_csv(const Envelope& e) {
  std::string out;
  const auto& r = e.results;
  if (e.command == "roots") {
    out += join_csv({"kind", "value"});
    out += join_csv({"count", std::to_string(r["count"].get<long long>())});
    for (const auto& root : r["positive_roots"]) out += join_csv({"positive_root", root_str(root)});
    out += join_csv({"highest_root", root_str(r["highest_root"])});
  } else if (e.command == "gradings") {
    bool dedupe = e.inputs["dedupe"].get<bool>();
    out += join_csv({"sigma", dedupe ? "orbit" : "class", "neg_dims", "dim_n0", "levi"});
    for (const auto& g : r["gradings"])
      out += join_csv({sigma_str(g["sigma"]),
                       dedupe ? orbit_str(g["orbit"]) : sigma_str(g["class_rep"]),
                       dims_str(g["neg_dims"]), std::to_string(g["dim_n0"].get<long long>()),
                       g["levi"]["display"].get<std::string>()});
  } else if (e.command == "dims") {
    out += join_csv({"key", "value"});
    out += join_csv({"neg_dims", dims_str(r["neg_dims"])});
    out += join_csv({"dim_n0", std::to_string(r["dim_n0"].get<long long>())});
    out += join_csv({"ht0_root_count", std::to_string(r["ht0_root_count"].get<long long>())});
    out += join_csv({"dim_algebra", std::to_string(r["dim_algebra"].get<long long>())});
    out += join_csv({"dim_audit_ok", bool_str(r["dim_audit_ok"].get<bool>())});
    if (!r["closed_form"].is_null()) {
      out += join_csv({"closed_form_published", dims_str(r["closed_form"]["published"])});
      out += join_csv({"closed_form_corrected", dims_str(r["closed_form"]["corrected"])});
    }
  } else if (e.command == "levi") {
    out += join_csv({"key", "value"});
    out += join_csv({"center_dim", std::to_string(r["center_dim"].get<int>())});
    out += join_csv({"n0", r["display"].get<std::string>()});
    out += join_csv({"total_dim", std::to_string(r["total_dim"].get<long long>())});
  } else if (e.command == "free") {
    out += join_csv({"sigma", "neg_dims", "r", "witt", "free", "reason", "pair",
                     "cubic_constant", "cubic_solutions"});
    for (const auto& g : r["gradings"]) {
      std::string constant = g["cubic"].is_null()
                                 ? "-"
                                 : std::to_string(g["cubic"]["constant"].get<long long>());
      std::string sols = g["cubic"].is_null() || g["cubic"]["solutions"].empty()
                             ? "none"
                             : dims_str(g["cubic"]["solutions"]);
      out += join_csv({sigma_str(g["sigma"]), dims_str(g["neg_dims"]),
                       std::to_string(g["r"].get<long long>()), dims_str(g["witt_expected"]),
                       bool_str(g["free"].get<bool>()), g["reason"].get<std::string>(),
                       pair_cell(g["commuting_pair"]), constant, sols});
    }
    out += join_csv({"summary_free_count",
                     std::to_string(r["summary"]["free_count"].get<long long>()), "", "", "", "",
                     "", "", ""});
  } else if (e.command == "scan") {
    out += join_csv({"type", "sigma", "orbit_size", "neg_dims", "dim_n0", "levi", "free",
                     "reason", "pair"});
    for (const auto& g : r["entries"])
      out += join_csv({g["type"].get<std::string>(), sigma_str(g["sigma"]),
                       std::to_string(g["orbit_size"].get<long long>()),
                       dims_str(g["neg_dims"]), std::to_string(g["dim_n0"].get<long long>()),
                       g["levi"].get<std::string>(), bool_str(g["free"].get<bool>()),
                       g["reason"].get<std::string>(), pair_cell(g["commuting_pair"])});
    out += join_csv({"summary", r["summary"]["line"].get<std::string>(), "", "", "", "", "", "",
                     ""});
  } else if (e.command == "tables") {
    out += join_csv({"block", "label", "published", "computed", "match"});
    for (const auto& g : r["highest_roots"])
      out += join_csv({"highest_roots", g["type"].get<std::string>(), root_str(g["published"]),
                       root_str(g["computed"]), bool_str(g["match"].get<bool>())});
    for (const auto& g : r["exceptional_gradings"])
      out += join_csv({"exceptional_gradings",
                       g["type"].get<std::string>() + " " + sigma_str(g["sigma"]),
                       dims_str(g["published"]), dims_str(g["computed"]),
                       bool_str(g["match"].get<bool>())});
    for (const auto& g : r["levi_classical"])
      out += join_csv({"levi_classical",
                       g["family"].get<std::string>() + " " + g["sigma_pattern"].get<std::string>(),
                       g["n0"].get<std::string>(),
                       std::to_string(g["instances_rank_le_12"].get<long long>()) + " instances",
                       bool_str(g["match"].get<bool>())});
    for (const auto& g : r["levi_exceptional"])
      out += join_csv({"levi_exceptional",
                       g["type"].get<std::string>() + " " + sigma_str(g["sigma"]),
                       g["published"].get<std::string>(), g["computed"].get<std::string>(),
                       bool_str(g["match"].get<bool>())});
    for (const auto& g : r["classical_dim_forms"])
      out += join_csv({"classical_dim_forms",
                       g["type"].get<std::string>() + " " + sigma_str(g["sigma"]),
                       dims_str(g["published"]), dims_str(g["enumerated"]),
                       g["flagged_depths"].empty() ? "yes" : "no"});
    for (const auto& g : r["cubic_constants"])
      out += join_csv({"cubic_constants",
                       g["type"].get<std::string>() + " " + sigma_str(g["sigma"]),
                       g["published"].is_null() ? "-"
                                                : std::to_string(g["published"].get<long long>()),
                       std::to_string(g["computed"].get<long long>()),
                       bool_str(g["match"].get<bool>())});
  }
  for (const auto& er : e.errata)
    out += join_csv({"erratum", er.location, er.published, er.computed, er.note});
  return out;
}

}  // namespace

std::string render(const Envelope& e, Format f) {
  if (f == Format::Json) {
    ordered_json j;
    j["command"] = e.command;
    j["inputs"] = e.inputs;
    j["results"] = e.results;
    ordered_json errata = ordered_json::array();
    for (const auto& er : e.errata)
      errata.push_back(ordered_json{{"location", er.location},
                                    {"published", er.published},
                                    {"computed", er.computed},
                                    {"note", er.note}});
    j["errata"] = errata;
    return j.dump(2) + "\n";
  }
  if (f == Format::Csv) return render_csv(e);
  return render_table(e);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact enumeration and analysis of |k|-gradings of the complex simple Lie algebras"};
  app.require_subcommand(1);

  std::string format = "table";
  std::string type_str, sigma_csv, families = "all";
  int k = 3, max_rank = 12;
  bool dedupe = false;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format: table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
  };

  CLI::App* roots = app.add_subcommand("roots", "positive roots and highest root");
  roots->add_option("type", type_str, "Lie type, e.g. A5 or G2")->required();
  add_format(roots);

  CLI::App* gradings = app.add_subcommand("gradings", "|k|-gradings with dimensions and n0");
  gradings->add_option("type", type_str)->required();
  gradings->add_option("--k", k, "grading depth (default 3)");
  gradings->add_flag("--dedupe", dedupe, "one row per diagram-automorphism orbit");
  add_format(gradings);

  CLI::App* dims = app.add_subcommand("dims", "graded dimensions of one grading");
  dims->add_option("type", type_str)->required();
  dims->add_option("--sigma", sigma_csv, "comma-separated simple-root indices")->required();
  dims->add_option("--k", k);
  add_format(dims);

  CLI::App* levi = app.add_subcommand("levi", "reductive part for a subset of simple roots");
  levi->add_option("type", type_str)->required();
  levi->add_option("--sigma", sigma_csv)->required();
  add_format(levi);

  CLI::App* free_cmd = app.add_subcommand("free", "freeness analysis of the negative part");
  free_cmd->add_option("type", type_str, "Lie type, or 'scan'")->required();
  free_cmd->add_option("--k", k);
  free_cmd->add_option("--sigma", sigma_csv, "restrict to one grading");
  free_cmd->add_option("--families", families, "family letters or 'all' (scan mode)");
  free_cmd->add_option("--max-rank", max_rank, "rank cap (scan mode, default 12)");
  add_format(free_cmd);

  CLI::App* scan_cmd = app.add_subcommand("scan", "scan families for free negative parts");
  scan_cmd->add_option("--families", families, "family letters or 'all'");
  scan_cmd->add_option("--max-rank", max_rank);
  scan_cmd->add_option("--k", k);
  add_format(scan_cmd);

  CLI::App* tables = app.add_subcommand("tables", "reproduce the published tables with errata");
  add_format(tables);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& h) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& p) {
    err << "error: " << p.what() << "\n";
    return 2;
  }

  try {
    Envelope e;
    if (roots->parsed()) e = cmd_roots(type_str);
    else if (gradings->parsed()) e = cmd_gradings(type_str, k, dedupe);
    else if (dims->parsed()) e = cmd_dims(type_str, sigma_csv, k);
    else if (levi->parsed()) e = cmd_levi(type_str, sigma_csv);
    else if (free_cmd->parsed()) {
      if (type_str == "scan")
        e = cmd_scan(families, max_rank, k);
      else
        e = cmd_free(type_str, k, sigma_csv);
    } else if (scan_cmd->parsed()) e = cmd_scan(families, max_rank, k);
    else if (tables->parsed()) e = cmd_tables();

    Format f = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Table;
    out << render(e, f);
    return 0;
  } catch (const input_error& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const internal_error& ex) {
    err << "internal consistency error: " << ex.what() << "\n";
    return 3;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << "\n";
    return 3;
  }
}

}  // namespace liegrad
