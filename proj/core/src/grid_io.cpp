#include "bineuc/grid_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "bineuc/error.hpp"

namespace bineuc {

namespace {

constexpr const char* kMagic = "bineuc-gridfunction";
constexpr int kVersion = 1;

[[noreturn]] void bad(const std::string& what) {
  throw ValidationError(Errc::format, "grid function file: " + what);
}

std::string expect_key(std::istream& is, const std::string& key) {
  std::string line;
  if (!std::getline(is, line)) bad("missing '" + key + "'");
  std::istringstream ls(line);
  std::string k;
  std::string v;
  ls >> k >> v;
  if (k != key || v.empty()) bad("expected '" + key + "', got '" + line + "'");
  return v;
}

long to_long(const std::string& s, const std::string& key) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) bad("bad integer for " + key);
    return v;
  } catch (const std::logic_error&) {
    bad("bad integer for " + key);
  }
}

}  // namespace

void write_grid_function(std::ostream& os, const GridFunction& F) {
  const Grid& g = F.grid;
  std::ostringstream change;
  change.precision(17);
  change << F.last_change;
  os << kMagic << ' ' << kVersion << '\n'
     << "z_max " << g.z_max().to_string() << '\n'
     << "level " << g.level() << '\n'
     << "precision_bits " << g.precision() << '\n'
     << "degree " << F.degree << '\n'
     << "iterations " << F.iterations << '\n'
     << "converged " << (F.converged ? 1 : 0) << '\n'
     << "last_change " << change.str() << '\n'
     << "points " << F.values.size() << '\n';
  for (std::size_t i = 0; i < F.values.size(); ++i) {
    os << g.z(i).to_string() << ' ' << F.values[i].to_string() << '\n';
  }
}

GridFunction read_grid_function(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) bad("empty input");
  {
    std::istringstream ls(line);
    std::string magic;
    int version = 0;
    ls >> magic >> version;
    if (magic != kMagic) bad("not a grid function file");
    if (version != kVersion) bad("unsupported version " + std::to_string(version));
  }
  const std::string zmax_text = expect_key(is, "z_max");
  const long level = to_long(expect_key(is, "level"), "level");
  const long prec = to_long(expect_key(is, "precision_bits"), "precision_bits");
  const long degree = to_long(expect_key(is, "degree"), "degree");
  const long iterations = to_long(expect_key(is, "iterations"), "iterations");
  const long converged = to_long(expect_key(is, "converged"), "converged");
  const std::string change_text = expect_key(is, "last_change");
  const long points = to_long(expect_key(is, "points"), "points");
  if (prec < MPFR_PREC_MIN || prec > (1L << 20)) bad("precision out of range");
  if (level < 1 || level > Grid::kMaxLevel) bad("level out of range");

  Grid grid(BigReal::from_string(zmax_text, prec), static_cast<int>(level));
  if (points < 0 || static_cast<std::size_t>(points) != grid.size()) bad("point count does not match level");
  GridFunction F{grid, {}, static_cast<int>(iterations), converged != 0, std::stod(change_text),
                 static_cast<int>(degree)};
  F.values.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::getline(is, line)) bad("truncated at point " + std::to_string(i));
    std::istringstream ls(line);
    std::string zt;
    std::string vt;
    ls >> zt >> vt;
    if (vt.empty()) bad("malformed line " + std::to_string(i));
    const BigReal z = BigReal::from_string(zt, prec);
    if (!(z == grid.z(i))) bad("z value at point " + std::to_string(i) + " is off the grid");
    F.values.push_back(BigReal::from_string(vt, prec));
  }
  return F;
}

void save_grid_function(const std::filesystem::path& path, const GridFunction& F) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream os(tmp);
    if (!os) throw ValidationError(Errc::format, "cannot write " + tmp);
    write_grid_function(os, F);
    if (!os) throw ValidationError(Errc::format, "write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

GridFunction load_grid_function(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ValidationError(Errc::format, "cannot read " + path.string());
  return read_grid_function(is);
}

std::string cache_file_name(const Grid& grid, int degree) {
  return "ftilde-z" + grid.z_max().to_string(12) + "-L" + std::to_string(grid.level()) + "-p" +
         std::to_string(grid.precision()) + "-d" + std::to_string(degree) + ".txt";
}

GridFunction cached_fixed_point(const std::filesystem::path& cache_dir, const Grid& grid,
                                const IterationOptions& opts) {
  const auto path = cache_dir / cache_file_name(grid, opts.degree);
  std::optional<GridFunction> cached;
  if (std::filesystem::exists(path)) {
    GridFunction F = load_grid_function(path);
    if (F.grid == grid && F.degree == opts.degree) cached = std::move(F);
  }

  GridFunction F = cached ? *cached : initial_ftilde(grid, opts.degree);
  if (opts.fixed_iterations > 0) {
    if (F.iterations == opts.fixed_iterations) return F;
    if (F.iterations > opts.fixed_iterations) F = initial_ftilde(grid, opts.degree);
    IterationOptions more = opts;
    more.fixed_iterations = opts.fixed_iterations - F.iterations;
    F = continue_iteration(F, more);
  } else {
    if (cached && F.last_change > 0.0 && F.last_change < opts.tolerance) return F;
    F = continue_iteration(F, opts);
  }
  save_grid_function(path, F);
  return F;
}

}  // namespace bineuc
