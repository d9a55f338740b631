#include "rcyclic/instances.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "rcyclic/decomposition.hpp"
#include "rcyclic/errors.hpp"

namespace rcyclic {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// ---------------------------------------------------------------- generators

std::vector<Point> sector_witnesses(const Sector& s) {
  const double mid = 0.5 * (s.angle_begin + s.angle_end);
  auto polar = [&](double rho, double a) {
    return Point::at({s.center[0] + rho * std::cos(a), s.center[1] + rho * std::sin(a)});
  };
  return {Point::at({s.center[0], s.center[1]}), polar(0.5 * s.radius, mid), polar(s.radius, mid),
          polar(s.radius, s.angle_begin), polar(s.radius, s.angle_end)};
}

MemberSet sector_set(std::array<double, 2> center, double begin, double end) {
  Sector s{center, 1.0, begin, end};
  return MemberSet(s, sector_witnesses(s));
}

std::string scale_tag(double scale) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", scale);
  return buf;
}

// ---------------------------------------------------------------- document model

struct Entry {
  std::size_t line;
  std::string key;
  std::string value;
};

struct Section {
  std::size_t line = 0;
  std::string name;
  std::string arg;
  std::vector<Entry> entries;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

double parse_real(const std::string& token, const Entry& e) {
  double v = 0.0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v))
    throw ParseError(e.line, e.key, "expected a finite real, got '" + token + "'");
  return v;
}

long long parse_integer(const Entry& e) {
  long long v = 0;
  const std::string token = trim(e.value);
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (token.empty() || ec != std::errc() || ptr != end)
    throw ParseError(e.line, e.key, "expected an integer, got '" + token + "'");
  return v;
}

std::vector<double> parse_reals(const Entry& e, std::size_t expected = 0) {
  std::vector<double> out;
  for (const auto& w : words(e.value)) out.push_back(parse_real(w, e));
  if (out.empty()) throw ParseError(e.line, e.key, "expected at least one number");
  if (expected && out.size() != expected)
    throw ParseError(e.line, e.key, "expected " + std::to_string(expected) + " numbers, got " + std::to_string(out.size()));
  return out;
}

class SectionReader {
 public:
  SectionReader(const Section& s, std::initializer_list<const char*> allowed) : s_(s) {
    for (const auto& e : s.entries) {
      bool ok = false;
      for (const char* key : allowed) ok = ok || e.key == key;
      if (!ok) throw ParseError(e.line, e.key, "unknown field in [" + header() + "]");
    }
  }

  const Entry* find(const std::string& key) const {
    const Entry* found = nullptr;
    for (const auto& e : s_.entries)
      if (e.key == key) {
        if (found) throw ParseError(e.line, key, "duplicate field");
        found = &e;
      }
    return found;
  }

  const Entry& require(const std::string& key) const {
    if (const Entry* e = find(key)) return *e;
    throw ParseError(s_.line, key, "missing required field in [" + header() + "]");
  }

  std::vector<const Entry*> all(const std::string& key) const {
    std::vector<const Entry*> out;
    for (const auto& e : s_.entries)
      if (e.key == key) out.push_back(&e);
    return out;
  }

  std::string header() const { return s_.arg.empty() ? s_.name : s_.name + " " + s_.arg; }
  std::size_t line() const { return s_.line; }

 private:
  const Section& s_;
};

struct Document {
  std::size_t header_line = 0;
  Section top;
  std::vector<Section> sections;
};

Document split(std::string_view text) {
  Document doc;
  Section* current = &doc.top;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = trim(hash == std::string_view::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;

    if (!header_seen) {
      const auto w = words(line);
      if (w.size() != 2 || w[0] != kInstanceFormat)
        throw ParseError(line_no, "", "expected header '" + std::string(kInstanceFormat) + " " +
                                          std::to_string(kInstanceVersion) + "'");
      if (w[1] != std::to_string(kInstanceVersion))
        throw ParseError(line_no, "version", "unsupported version " + w[1]);
      header_seen = true;
      doc.header_line = line_no;
      continue;
    }

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_no, "", "unterminated section header");
      const auto w = words(line.substr(1, line.size() - 2));
      if (w.empty() || w.size() > 2) throw ParseError(line_no, "", "malformed section header");
      doc.sections.push_back({line_no, w[0], w.size() == 2 ? w[1] : std::string(), {}});
      current = &doc.sections.back();
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "", "expected 'key = value'");
    Entry e{line_no, trim(std::string_view(line).substr(0, eq)), trim(std::string_view(line).substr(eq + 1))};
    if (e.key.empty()) throw ParseError(line_no, "", "missing key before '='");
    current->entries.push_back(std::move(e));
  }
  if (!header_seen) throw ParseError(line_no, "", "empty document");
  return doc;
}

// ---------------------------------------------------------------- section parsers

MetricSpace parse_space(const Section& section) {
  SectionReader s(section, {"kind", "dim", "points", "metric", "row"});
  const Entry& kind = s.require("kind");
  if (kind.value == "euclidean") {
    const Entry& dim = s.require("dim");
    const long long d = parse_integer(dim);
    if (d < 1) throw ParseError(dim.line, "dim", "dimension must be positive");
    return EuclideanSpace(static_cast<std::size_t>(d));
  }
  if (kind.value != "finite") throw ParseError(kind.line, "kind", "unknown space kind '" + kind.value + "'");

  const Entry& points = s.require("points");
  auto labels = words(points.value);
  if (labels.empty()) throw ParseError(points.line, "points", "finite space needs at least one point");
  const Entry& metric = s.require("metric");
  try {
    if (metric.value == "discrete") {
      if (!s.all("row").empty()) throw ParseError(s.all("row").front()->line, "row", "rows are only used with metric = table");
      return FiniteSpace::discrete(labels);
    }
    if (metric.value != "table") throw ParseError(metric.line, "metric", "unknown metric '" + metric.value + "'");
    const std::size_t n = labels.size();
    std::vector<double> table(n * n);
    std::vector<bool> seen(n, false);
    for (const Entry* row : s.all("row")) {
      auto w = words(row->value);
      if (w.size() != n + 1)
        throw ParseError(row->line, "row", "expected a label followed by " + std::to_string(n) + " distances");
      const auto it = std::find(labels.begin(), labels.end(), w[0]);
      if (it == labels.end()) throw ParseError(row->line, "row", "unknown point '" + w[0] + "'");
      const auto i = static_cast<std::size_t>(it - labels.begin());
      if (seen[i]) throw ParseError(row->line, "row", "duplicate row for '" + w[0] + "'");
      seen[i] = true;
      for (std::size_t j = 0; j < n; ++j) table[i * n + j] = parse_real(w[j + 1], *row);
    }
    for (std::size_t i = 0; i < n; ++i)
      if (!seen[i]) throw ParseError(s.line(), "row", "missing distance row for '" + labels[i] + "'");
    return FiniteSpace(labels, std::move(table));
  } catch (const ArgumentError& err) {
    throw ParseError(points.line, "points", err.what());
  }
}

MemberSet parse_set(const Section& section, const MetricSpace& space) {
  SectionReader s(section, {"kind", "points", "bounds", "center", "radius", "normal", "offset", "angles", "witness"});
  const Entry& kind = s.require("kind");
  if (kind.value == "finite") {
    const Entry& points = s.require("points");
    auto labels = words(points.value);
    if (labels.empty()) throw ParseError(points.line, "points", "set has zero witnesses");
    const auto* fin = space.finite();
    if (!fin) throw ParseError(kind.line, "kind", "finite sets need a finite space");
    for (const auto& label : labels)
      if (!fin->index_of(label)) throw ParseError(points.line, "points", "unknown point '" + label + "'");
    if (!s.all("witness").empty()) throw ParseError(s.all("witness").front()->line, "witness", "finite sets list points instead");
    return MemberSet::finite(std::move(labels));
  }

  const auto* euc = space.euclidean();
  if (!euc) throw ParseError(kind.line, "kind", "'" + kind.value + "' sets need a Euclidean space");
  const std::size_t dim = euc->dimension();

  SetShape shape;
  if (kind.value == "interval") {
    if (dim != 1) throw ParseError(kind.line, "kind", "intervals need a 1-dimensional space");
    auto b = parse_reals(s.require("bounds"), 2);
    shape = Interval{b[0], b[1]};
  } else if (kind.value == "ball") {
    shape = Ball{parse_reals(s.require("center"), dim), parse_reals(s.require("radius"), 1)[0]};
  } else if (kind.value == "halfspace") {
    shape = HalfSpace{parse_reals(s.require("normal"), dim), parse_reals(s.require("offset"), 1)[0]};
  } else if (kind.value == "sector") {
    if (dim != 2) throw ParseError(kind.line, "kind", "sectors need a 2-dimensional space");
    auto c = parse_reals(s.require("center"), 2);
    auto a = parse_reals(s.require("angles"), 2);
    shape = Sector{{c[0], c[1]}, parse_reals(s.require("radius"), 1)[0], a[0], a[1]};
  } else {
    throw ParseError(kind.line, "kind", "unknown set kind '" + kind.value + "'");
  }

  std::vector<Point> witnesses;
  for (const Entry* w : s.all("witness")) witnesses.push_back(Point::at(parse_reals(*w, dim)));
  if (witnesses.empty()) throw ParseError(s.line(), "witness", "set has zero witnesses");
  try {
    return MemberSet(std::move(shape), std::move(witnesses));
  } catch (const ArgumentError& err) {
    throw ParseError(s.line(), "kind", err.what());
  }
}

SelfMap parse_map(const Section& section, const MetricSpace& space) {
  SectionReader s(section, {"kind", "entry", "dim", "linear", "translation", "center", "angle", "scale", "piece"});
  const Entry& kind = s.require("kind");
  try {
    if (kind.value == "lookup") {
      const auto* fin = space.finite();
      if (!fin) throw ParseError(kind.line, "kind", "lookup maps need a finite space");
      LookupMap map;
      for (const Entry* e : s.all("entry")) {
        auto w = words(e->value);
        if (w.size() != 2) throw ParseError(e->line, "entry", "expected 'entry = <from> <to>'");
        for (const auto& label : w)
          if (!fin->index_of(label)) throw ParseError(e->line, "entry", "unknown point '" + label + "'");
        if (!map.table.emplace(w[0], w[1]).second) throw ParseError(e->line, "entry", "duplicate entry for '" + w[0] + "'");
      }
      for (const auto& label : fin->labels())
        if (!map.table.count(label)) throw ParseError(s.line(), "entry", "map is undefined at '" + label + "'");
      return SelfMap(std::move(map));
    }
    const auto* euc = space.euclidean();
    if (kind.value == "affine") {
      if (!euc) throw ParseError(kind.line, "kind", "affine maps need a Euclidean space");
      const Entry& dim_entry = s.require("dim");
      const long long dim = parse_integer(dim_entry);
      if (dim < 1 || static_cast<std::size_t>(dim) != euc->dimension())
        throw ParseError(dim_entry.line, "dim", "map dimension must equal the space dimension");
      const auto n = static_cast<std::size_t>(dim);
      return SelfMap(AffineMap{n, parse_reals(s.require("linear"), n * n), parse_reals(s.require("translation"), n)});
    }
    if (kind.value == "rotation") {
      if (!euc || euc->dimension() != 2) throw ParseError(kind.line, "kind", "rotations need a 2-dimensional space");
      auto c = parse_reals(s.require("center"), 2);
      return SelfMap(ScaledRotation{{c[0], c[1]}, parse_reals(s.require("angle"), 1)[0],
                                    parse_reals(s.require("scale"), 1)[0]});
    }
    if (kind.value == "piecewise_rotation") {
      if (!euc || euc->dimension() != 2) throw ParseError(kind.line, "kind", "rotations need a 2-dimensional space");
      PiecewiseRotation pw;
      for (const Entry* e : s.all("piece")) {
        auto v = parse_reals(*e, 4);
        pw.pieces.push_back({{v[0], v[1]}, v[2], v[3]});
      }
      if (pw.pieces.empty()) throw ParseError(s.line(), "piece", "piecewise rotation needs at least one piece");
      return SelfMap(std::move(pw));
    }
  } catch (const ArgumentError& err) {
    throw ParseError(s.line(), "kind", err.what());
  }
  throw ParseError(kind.line, "kind", "unknown map kind '" + kind.value + "'");
}

// ---------------------------------------------------------------- writer

std::string exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string exact_list(std::span<const double> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += exact(values[i]);
  }
  return out;
}

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out += ' ';
    out += words[i];
  }
  return out;
}

struct WriteShape {
  std::ostream& out;
  void operator()(const FiniteSet& s) const { out << "kind = finite\npoints = " << join(s.labels) << "\n"; }
  void operator()(const Interval& s) const { out << "kind = interval\nbounds = " << exact(s.lo) << ' ' << exact(s.hi) << "\n"; }
  void operator()(const Ball& s) const {
    out << "kind = ball\ncenter = " << exact_list(s.center) << "\nradius = " << exact(s.radius) << "\n";
  }
  void operator()(const HalfSpace& s) const {
    out << "kind = halfspace\nnormal = " << exact_list(s.normal) << "\noffset = " << exact(s.offset) << "\n";
  }
  void operator()(const Sector& s) const {
    out << "kind = sector\ncenter = " << exact_list(s.center) << "\nradius = " << exact(s.radius)
        << "\nangles = " << exact(s.angle_begin) << ' ' << exact(s.angle_end) << "\n";
  }
};

struct WriteMap {
  std::ostream& out;
  void operator()(const LookupMap& m) const {
    out << "kind = lookup\n";
    for (const auto& [from, to] : m.table) out << "entry = " << from << ' ' << to << "\n";
  }
  void operator()(const AffineMap& m) const {
    out << "kind = affine\ndim = " << m.dim << "\nlinear = " << exact_list(m.linear)
        << "\ntranslation = " << exact_list(m.translation) << "\n";
  }
  void operator()(const ScaledRotation& m) const {
    out << "kind = rotation\ncenter = " << exact_list(m.center) << "\nangle = " << exact(m.angle)
        << "\nscale = " << exact(m.scale) << "\n";
  }
  void operator()(const PiecewiseRotation& m) const {
    out << "kind = piecewise_rotation\n";
    for (const auto& p : m.pieces)
      out << "piece = " << exact(p.center[0]) << ' ' << exact(p.center[1]) << ' ' << exact(p.angle) << ' '
          << exact(p.scale) << "\n";
  }
  void operator()(const IteratedMap&) const { throw ArgumentError("iterated maps have no document form"); }
};

}  // namespace

InstanceSpec gen_finite_shift(int m, int r) {
  if (m < 2) throw ArgumentError("m must be at least 2");
  if (r < 1 || r > m) throw ArgumentError("r must lie in [1, m]");
  std::vector<std::string> labels;
  for (int i = 1; i <= m; ++i) labels.push_back("x" + std::to_string(i));
  std::vector<MemberSet> sets;
  LookupMap map;
  for (int i = 1; i <= m; ++i) {
    sets.push_back(MemberSet::finite({labels[static_cast<std::size_t>(i - 1)]}));
    map.table.emplace(labels[static_cast<std::size_t>(i - 1)], labels[static_cast<std::size_t>(wrap_index(i + r, m) - 1)]);
  }
  return InstanceSpec{"finite_shift_m" + std::to_string(m) + "_r" + std::to_string(r),
                      r,
                      Mode::Synchronous,
                      FiniteSpace::discrete(std::move(labels)),
                      CyclicCovering(std::move(sets)),
                      SelfMap(std::move(map)),
                      std::nullopt,
                      {}};
}

InstanceSpec gen_sector_rotation(int m, int r, double scale, int disks) {
  if (m < 2) throw ArgumentError("m must be at least 2");
  if (r < 1 || r >= m) throw ArgumentError("r must lie in [1, m)");
  if (!(scale > 0.0 && scale < 1.0)) throw ArgumentError("scale must lie in (0, 1)");
  const int k = std::gcd(m, r);
  if (disks != 1 && disks != k)
    throw ArgumentError("disks must be 1 or gcd(m, r) = " + std::to_string(k) + ", got " + std::to_string(disks));

  std::vector<std::optional<MemberSet>> slots(static_cast<std::size_t>(m));
  std::optional<SelfMap> map;
  if (disks == 1) {
    for (int i = 1; i <= m; ++i)
      slots[static_cast<std::size_t>(i - 1)] = sector_set({0.0, 0.0}, kTwoPi * (i - 1) / m, kTwoPi * i / m);
    map = SelfMap(ScaledRotation{{0.0, 0.0}, kTwoPi * r / m, scale});
  } else {
    const auto dec = decompose(m, r);
    const int length = m / k;
    PiecewiseRotation pw;
    for (int j = 0; j < k; ++j) {
      const std::array<double, 2> center{3.0 * j, 0.0};
      for (int t = 0; t < length; ++t)
        slots[static_cast<std::size_t>(dec.circuits[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)] - 1)] =
            sector_set(center, kTwoPi * t / length, kTwoPi * (t + 1) / length);
      pw.pieces.push_back({center, kTwoPi / length, scale});
    }
    map = SelfMap(std::move(pw));
  }
  std::vector<MemberSet> sets;
  for (auto& s : slots) sets.push_back(std::move(*s));
  return InstanceSpec{"sector_rotation_m" + std::to_string(m) + "_r" + std::to_string(r) + "_s" + scale_tag(scale) +
                          "_d" + std::to_string(disks),
                      r,
                      Mode::Synchronous,
                      EuclideanSpace(2),
                      CyclicCovering(std::move(sets)),
                      std::move(*map),
                      scale,
                      {}};
}

InstanceSpec load_instance(std::string_view text) {
  const Document doc = split(text);
  SectionReader top(doc.top, {"name", "m", "r", "mode", "c", "assume"});

  const Entry& name = top.require("name");
  if (name.value.empty() || words(name.value).size() != 1)
    throw ParseError(name.line, "name", "name must be a single nonempty word");
  const Entry& m_entry = top.require("m");
  const long long m = parse_integer(m_entry);
  if (m < 2 || m > 100000) throw ParseError(m_entry.line, "m", "m must lie in [2, 100000], got " + std::to_string(m));
  const Entry& r_entry = top.require("r");
  const long long r = parse_integer(r_entry);
  if (r < 1 || r > m)
    throw ParseError(r_entry.line, "r", "r must lie in [1, " + std::to_string(m) + "], got " + std::to_string(r));

  Mode mode = Mode::Synchronous;
  if (const Entry* e = top.find("mode")) {
    if (e->value == "async")
      mode = Mode::Asynchronous;
    else if (e->value != "sync")
      throw ParseError(e->line, "mode", "mode must be 'sync' or 'async'");
  }
  std::optional<double> c;
  if (const Entry* e = top.find("c")) {
    c = parse_reals(*e, 1)[0];
    if (!(*c >= 0.0 && *c < 1.0)) throw ParseError(e->line, "c", "c must lie in [0, 1)");
  }
  Assumptions assumptions;
  if (const Entry* e = top.find("assume")) {
    assumptions = {false, false};
    for (const auto& w : words(e->value)) {
      if (w == "complete")
        assumptions.complete = true;
      else if (w == "closed_sets")
        assumptions.closed_sets = true;
      else if (w != "none")
        throw ParseError(e->line, "assume", "unknown assumption '" + w + "'");
    }
  }

  const Section* space_section = nullptr;
  const Section* map_section = nullptr;
  std::vector<const Section*> set_sections(static_cast<std::size_t>(m), nullptr);
  for (const auto& s : doc.sections) {
    if (s.name == "space" || s.name == "map") {
      const Section*& slot = s.name == "space" ? space_section : map_section;
      if (!s.arg.empty()) throw ParseError(s.line, "", "[" + s.name + "] takes no argument");
      if (slot) throw ParseError(s.line, "", "duplicate [" + s.name + "] section");
      slot = &s;
    } else if (s.name == "set") {
      Entry pseudo{s.line, "set", s.arg};
      const long long i = parse_integer(pseudo);
      if (i < 1 || i > m) throw ParseError(s.line, "set", "set index must lie in [1, " + std::to_string(m) + "]");
      auto& slot = set_sections[static_cast<std::size_t>(i - 1)];
      if (slot) throw ParseError(s.line, "set", "duplicate [set " + s.arg + "]");
      slot = &s;
    } else {
      throw ParseError(s.line, "", "unknown section [" + s.name + "]");
    }
  }
  const std::size_t end_line = doc.sections.empty() ? doc.header_line : doc.sections.back().line;
  if (!space_section) throw ParseError(end_line, "space", "missing [space] section");
  MetricSpace space = parse_space(*space_section);

  std::vector<MemberSet> sets;
  for (std::size_t i = 0; i < set_sections.size(); ++i) {
    if (!set_sections[i]) throw ParseError(end_line, "set", "missing [set " + std::to_string(i + 1) + "] section");
    sets.push_back(parse_set(*set_sections[i], space));
  }
  if (!map_section) throw ParseError(end_line, "map", "missing [map] section");
  SelfMap map = parse_map(*map_section, space);

  return InstanceSpec{name.value, static_cast<int>(r), mode, std::move(space), CyclicCovering(std::move(sets)),
                      std::move(map), c, assumptions};
}

InstanceSpec load_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open instance file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_instance(buf.str());
}

std::string serialize(const InstanceSpec& spec) {
  std::ostringstream out;
  out << kInstanceFormat << ' ' << kInstanceVersion << "\n";
  out << "name = " << spec.name << "\n";
  out << "m = " << spec.m() << "\n";
  out << "r = " << spec.r << "\n";
  out << "mode = " << (spec.mode == Mode::Synchronous ? "sync" : "async") << "\n";
  if (spec.c) out << "c = " << exact(*spec.c) << "\n";
  std::vector<std::string> assume;
  if (spec.assumptions.complete) assume.emplace_back("complete");
  if (spec.assumptions.closed_sets) assume.emplace_back("closed_sets");
  out << "assume = " << (assume.empty() ? std::string("none") : join(assume)) << "\n";

  out << "\n[space]\n";
  if (const auto* fin = spec.space.finite()) {
    out << "kind = finite\npoints = " << join(fin->labels()) << "\n";
    if (fin->is_discrete()) {
      out << "metric = discrete\n";
    } else {
      out << "metric = table\n";
      const std::size_t n = fin->size();
      for (std::size_t i = 0; i < n; ++i)
        out << "row = " << fin->labels()[i] << ' '
            << exact_list(std::span<const double>(fin->table()).subspan(i * n, n)) << "\n";
    }
  } else {
    out << "kind = euclidean\ndim = " << spec.space.euclidean()->dimension() << "\n";
  }

  for (int i = 1; i <= spec.m(); ++i) {
    const MemberSet& set = spec.covering.set(i);
    out << "\n[set " << i << "]\n";
    std::visit(WriteShape{out}, set.shape());
    if (!set.is_finite())
      for (const auto& w : set.witnesses()) out << "witness = " << exact_list(w.coords()) << "\n";
  }

  out << "\n[map]\n";
  std::visit(WriteMap{out}, spec.map.definition());
  return out.str();
}

}  // namespace rcyclic
