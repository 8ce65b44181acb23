#include "nlc/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <vector>

#include "nlc/transform.hpp"

namespace nlc {

namespace {

constexpr char magic[4] = {'N', 'L', 'C', '1'};

template <class U>
void put_le(std::vector<unsigned char>& out, U v) {
  for (std::size_t i = 0; i < sizeof(U); ++i) out.push_back(static_cast<unsigned char>(v >> (8 * i)));
}

void put_f64(std::vector<unsigned char>& out, double v) { put_le(out, std::bit_cast<std::uint64_t>(v)); }

class Reader {
public:
  explicit Reader(const std::vector<unsigned char>& bytes) : bytes_(bytes) {}

  template <class U>
  U get(const char* what) {
    if (pos_ + sizeof(U) > bytes_.size()) throw SnapshotError(std::string("truncated ") + what);
    U v = 0;
    for (std::size_t i = 0; i < sizeof(U); ++i) v |= static_cast<U>(static_cast<U>(bytes_[pos_ + i]) << (8 * i));
    pos_ += sizeof(U);
    return v;
  }

  double f64(const char* what) { return std::bit_cast<double>(get<std::uint64_t>(what)); }
  std::size_t remaining() const { return bytes_.size() - pos_; }

private:
  const std::vector<unsigned char>& bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

void write_snapshot(const SimState& state, const SimParams& params, const std::string& path) {
  const Grid& g = state.u.grid();
  require_same_grid(g, state.d.grid(), "write_snapshot");
  std::vector<unsigned char> out;
  out.insert(out.end(), std::begin(magic), std::end(magic));
  put_le<std::uint32_t>(out, snapshot_version);
  put_le<std::uint8_t>(out, static_cast<std::uint8_t>(g.dim()));
  for (int a = 0; a < g.dim(); ++a) put_le<std::uint64_t>(out, static_cast<std::uint64_t>(g.n()));
  put_f64(out, g.length());
  put_f64(out, state.t);
  put_le<std::uint8_t>(out, params.model == Model::lc ? 0 : 1);
  for (double v : {params.nu, params.lambda, params.gamma, params.epsilon, params.alpha, params.dt}) put_f64(out, v);

  out.reserve(out.size() + 8 * g.size() * static_cast<std::size_t>(state.u.size() + state.d.size()));
  for (const VectorField* v : {&state.u, &state.d}) {
    const VectorField p = to_physical(*v);
    for (const Field& c : p)
      for (double x : c.values()) put_f64(out, x);
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw SnapshotError("cannot open '" + path + "' for writing");
  f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
  if (!f) throw SnapshotError("write failed for '" + path + "'");
}

Snapshot read_snapshot(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw SnapshotError("cannot open '" + path + "'");
  const std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());

  if (bytes.size() < 4 || std::memcmp(bytes.data(), magic, 4) != 0) throw SnapshotError("bad magic");
  Reader r(bytes);
  for (int i = 0; i < 4; ++i) r.get<std::uint8_t>("header");
  const auto version = r.get<std::uint32_t>("header");
  if (version != snapshot_version)
    throw SnapshotError("version mismatch: file has " + std::to_string(version) + ", expected " +
                        std::to_string(snapshot_version));
  const int dim = r.get<std::uint8_t>("header");
  if (dim != 2 && dim != 3) throw SnapshotError("bad dimension " + std::to_string(dim));
  std::uint64_t n = 0;
  for (int a = 0; a < dim; ++a) {
    const auto na = r.get<std::uint64_t>("header");
    if (a > 0 && na != n) throw SnapshotError("unequal axis sizes are not supported");
    n = na;
  }
  if (n < 8 || n % 2 != 0 || n > (1u << 16)) throw SnapshotError("bad grid size " + std::to_string(n));
  const double length = r.f64("header");
  Snapshot s;
  s.state.t = r.f64("header");
  const auto tag = r.get<std::uint8_t>("header");
  if (tag > 1) throw SnapshotError("bad model tag " + std::to_string(tag));
  s.params.model = tag == 0 ? Model::lc : Model::lc_alpha;
  s.params.nu = r.f64("header");
  s.params.lambda = r.f64("header");
  s.params.gamma = r.f64("header");
  s.params.epsilon = r.f64("header");
  s.params.alpha = r.f64("header");
  s.params.dt = r.f64("header");

  Grid g;
  try {
    g = make_grid(dim, static_cast<int>(n), length);
  } catch (const std::invalid_argument& e) {
    throw SnapshotError(std::string("bad grid: ") + e.what());
  }
  const std::size_t count = g.size() * static_cast<std::size_t>(2 * dim);
  if (r.remaining() < 8 * count) throw SnapshotError("truncated payload");
  if (r.remaining() > 8 * count) throw SnapshotError("trailing bytes after payload");

  auto read_vector = [&]() {
    VectorField v(g, dim);
    for (Field& c : v)
      for (double& x : c.values()) x = r.f64("payload");
    return v;
  };
  s.state.u = read_vector();
  s.state.d = read_vector();
  return s;
}

}  // namespace nlc
