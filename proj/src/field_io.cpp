#include "gzk/field_io.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "gzk/errors.hpp"

namespace gzk {

namespace {

static_assert(std::endian::native == std::endian::little, "binary field format assumes little-endian");

constexpr char kMagic[4] = {'G', 'Z', 'K', 'F'};
constexpr std::uint32_t kVersion = 1;

template <class T>
void put(std::ostream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <class T>
T get(std::istream& in) {
  T v{};
  if (!in.read(reinterpret_cast<char*>(&v), sizeof v)) throw ValidationError("field file truncated");
  return v;
}

GridSpec checked_grid(std::uint64_t nx, std::uint64_t ny, double lx, double ly) {
  return make_grid(static_cast<std::size_t>(nx), static_cast<std::size_t>(ny), lx, ly);
}

}  // namespace

void write_field_binary(std::ostream& out, const Field& f) {
  const auto& g = f.grid();
  out.write(kMagic, 4);
  put<std::uint32_t>(out, kVersion);
  put<std::uint64_t>(out, g.nx());
  put<std::uint64_t>(out, g.ny());
  put<double>(out, g.lx());
  put<double>(out, g.ly());
  put<std::uint8_t>(out, f.is_spectral() ? 1 : 0);
  out.write(reinterpret_cast<const char*>(f.data().data()),
            static_cast<std::streamsize>(f.data().size() * sizeof(complex)));
}

Field read_field_binary(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) {
    throw ValidationError("not a GZKF field file");
  }
  if (const auto v = get<std::uint32_t>(in); v != kVersion) {
    throw ValidationError("unsupported field file version " + std::to_string(v));
  }
  const auto nx = get<std::uint64_t>(in);
  const auto ny = get<std::uint64_t>(in);
  const auto lx = get<double>(in);
  const auto ly = get<double>(in);
  const auto rep = get<std::uint8_t>(in);
  if (rep > 1) throw ValidationError("bad representation tag in field file");
  const GridSpec g = checked_grid(nx, ny, lx, ly);
  std::vector<complex> values(g.size());
  if (!in.read(reinterpret_cast<char*>(values.data()),
               static_cast<std::streamsize>(values.size() * sizeof(complex)))) {
    throw ValidationError("field file truncated");
  }
  return Field(g, rep ? Representation::Spectral : Representation::Physical, std::move(values));
}

void write_field_text(std::ostream& out, const Field& f) {
  const auto& g = f.grid();
  char buf[128];
  std::snprintf(buf, sizeof buf, "GZKF 1 %zu %zu %.17g %.17g %s\n", g.nx(), g.ny(), g.lx(), g.ly(),
                f.is_spectral() ? "spectral" : "physical");
  out << buf;
  for (const auto& v : f.values()) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g\n", v.real(), v.imag());
    out << buf;
  }
}

Field read_field_text(std::istream& in) {
  std::string magic, rep;
  int version = 0;
  std::uint64_t nx = 0, ny = 0;
  double lx = 0, ly = 0;
  if (!(in >> magic >> version >> nx >> ny >> lx >> ly >> rep) || magic != "GZKF") {
    throw ValidationError("not a GZKF text field file");
  }
  if (version != 1) throw ValidationError("unsupported field file version " + std::to_string(version));
  if (rep != "physical" && rep != "spectral") throw ValidationError("bad representation tag '" + rep + "'");
  const GridSpec g = checked_grid(nx, ny, lx, ly);
  std::vector<complex> values(g.size());
  for (auto& v : values) {
    double re, im;
    if (!(in >> re >> im)) throw ValidationError("field file truncated");
    v = {re, im};
  }
  return Field(g, rep == "spectral" ? Representation::Spectral : Representation::Physical,
               std::move(values));
}

void save_field(const std::filesystem::path& path, const Field& f) {
  const bool text = path.extension() == ".txt";
  std::ofstream out(path, text ? std::ios::out : std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  text ? write_field_text(out, f) : write_field_binary(out, f);
}

Field load_field(const std::filesystem::path& path) {
  const bool text = path.extension() == ".txt";
  std::ifstream in(path, text ? std::ios::in : std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path.string());
  return text ? read_field_text(in) : read_field_binary(in);
}

}  // namespace gzk
