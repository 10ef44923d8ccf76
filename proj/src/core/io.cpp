#include "fqinc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "fqinc/error.hpp"

namespace fqinc {

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(ErrorCode code, const std::string& source, std::size_t line,
                       const std::string& what) {
  throw Error(code, source + ":" + std::to_string(line) + ": " + what);
}

std::uint64_t parse_uint(const std::string& tok, const std::string& source, std::size_t line) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(ErrorCode::parse_error, source, line, "expected a nonnegative integer, got \"" + tok + "\"");
  }
  return v;
}

struct Header {
  std::uint64_t q = 0;
  std::uint64_t d = 0;
  std::string kind;
};

Header parse_header(const std::vector<std::string>& tokens, const std::string& source,
                    std::size_t line) {
  Header h;
  bool have_q = false, have_d = false, have_kind = false;
  for (const std::string& tok : tokens) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) fail(ErrorCode::parse_error, source, line, "bad header field \"" + tok + "\"");
    std::string key = tok.substr(0, eq);
    std::string value = tok.substr(eq + 1);
    if (key == "q" && !have_q) {
      h.q = parse_uint(value, source, line);
      have_q = true;
    } else if (key == "d" && !have_d) {
      h.d = parse_uint(value, source, line);
      have_d = true;
    } else if (key == "kind" && !have_kind) {
      h.kind = value;
      have_kind = true;
    } else {
      fail(ErrorCode::parse_error, source, line, "unexpected header field \"" + tok + "\"");
    }
  }
  if (!have_q || !have_d || !have_kind) {
    fail(ErrorCode::parse_error, source, line, "header must be \"q=<int> d=<int> kind=<points|spheres>\"");
  }
  if (h.kind != "points" && h.kind != "spheres") {
    fail(ErrorCode::parse_error, source, line, "kind must be points or spheres, got \"" + h.kind + "\"");
  }
  return h;
}

}  // namespace

ObjectFile read_objects(std::istream& in, const std::optional<Space>& expected,
                        const std::string& source) {
  std::string raw;
  std::size_t line_no = 0;
  std::optional<Header> header;
  std::vector<std::string> tokens;
  while (std::getline(in, raw)) {
    ++line_no;
    tokens = split(strip_comment(raw));
    if (tokens.empty()) continue;
    header = parse_header(tokens, source, line_no);
    break;
  }
  if (!header) throw Error(ErrorCode::parse_error, source + ": missing header line");

  std::optional<Space> space;
  try {
    space.emplace(FieldSpec(header->q), static_cast<unsigned>(header->d));
  } catch (const Error& e) {
    fail(ErrorCode::parse_error, source, line_no, e.what());
  }
  if (expected && *expected != *space) {
    fail(ErrorCode::context_mismatch, source, line_no,
         "header says q=" + std::to_string(space->q()) + " d=" + std::to_string(space->dim()) +
             " but the run uses q=" + std::to_string(expected->q()) +
             " d=" + std::to_string(expected->dim()));
  }

  const bool points = header->kind == "points";
  const std::size_t width = space->dim() + (points ? 0 : 1);
  PointSet point_set(*space);
  SphereFamily family(*space);
  std::unordered_map<std::uint64_t, std::size_t> first_seen;

  while (std::getline(in, raw)) {
    ++line_no;
    tokens = split(strip_comment(raw));
    if (tokens.empty()) continue;
    if (tokens.size() != width) {
      fail(ErrorCode::parse_error, source, line_no,
           "expected " + std::to_string(width) + " values, got " + std::to_string(tokens.size()));
    }
    Coords values;
    for (const std::string& tok : tokens) {
      std::uint64_t v = parse_uint(tok, source, line_no);
      if (v >= space->q()) {
        fail(ErrorCode::parse_error, source, line_no,
             "coordinate " + tok + " out of range for q=" + std::to_string(space->q()));
      }
      values.push_back(static_cast<Residue>(v));
    }
    const std::uint64_t key = space->encode(values);
    auto [it, fresh] = first_seen.try_emplace(key, line_no);
    if (!fresh) {
      fail(ErrorCode::duplicate, source, line_no,
           "duplicate at line " + std::to_string(line_no) + " (first seen at line " +
               std::to_string(it->second) + ")");
    }
    if (points) {
      point_set.add(Point::from_residues(*space, std::move(values)));
    } else {
      const Residue lambda = values.back();
      values.pop_back();
      family.add(Sphere(Point::from_residues(*space, std::move(values)),
                        FieldElement(space->field(), lambda)));
    }
  }
  if (points) return point_set;
  return family;
}

ObjectFile read_file(const std::string& path, const std::optional<Space>& expected) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open " + path);
  return read_objects(in, expected, path);
}

PointSet read_points_file(const std::string& path, const std::optional<Space>& expected) {
  ObjectFile f = read_file(path, expected);
  if (auto* p = std::get_if<PointSet>(&f)) return std::move(*p);
  throw Error(ErrorCode::parse_error, path + ": expected kind=points");
}

SphereFamily read_spheres_file(const std::string& path, const std::optional<Space>& expected) {
  ObjectFile f = read_file(path, expected);
  if (auto* s = std::get_if<SphereFamily>(&f)) return std::move(*s);
  throw Error(ErrorCode::parse_error, path + ": expected kind=spheres");
}

namespace {

void write_header(std::ostream& out, const Space& space, const char* kind) {
  out << "q=" << space.q() << " d=" << space.dim() << " kind=" << kind << '\n';
}

void write_coords(std::ostream& out, std::span<const Residue> coords) {
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out << ' ';
    out << coords[i];
  }
}

}  // namespace

void write_points(std::ostream& out, const PointSet& points) {
  write_header(out, points.space(), "points");
  for (const Point& p : points) {
    write_coords(out, p.coords());
    out << '\n';
  }
}

void write_spheres(std::ostream& out, const SphereFamily& spheres) {
  write_header(out, spheres.space(), "spheres");
  for (const Sphere& s : spheres) {
    write_coords(out, s.center().coords());
    out << ' ' << s.lambda().value() << '\n';
  }
}

void write_file(const std::string& path, const ObjectFile& objects) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_error, "cannot write " + path);
  if (auto* p = std::get_if<PointSet>(&objects)) {
    write_points(out, *p);
  } else {
    write_spheres(out, std::get<SphereFamily>(objects));
  }
  if (!out) throw Error(ErrorCode::io_error, "write failed for " + path);
}

}  // namespace fqinc
