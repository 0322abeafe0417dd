#include "wavexfer/container.hpp"

#include <array>
#include <bit>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>

#include "wavexfer/error.hpp"

namespace wavexfer {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {'W', 'G', 'T', '1'};
constexpr std::size_t kHeaderBytes = 12;

constexpr std::uint64_t align8(std::uint64_t n) noexcept { return (n + 7) & ~std::uint64_t{7}; }

class Writer {
 public:
  explicit Writer(std::vector<std::uint8_t>& out) : out_(out) {}

  void bytes(const void* data, std::size_t n) {
    const auto* p = static_cast<const std::uint8_t*>(data);
    out_.insert(out_.end(), p, p + n);
  }
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v) { little(v, 4); }
  void u64(std::uint64_t v) { little(v, 8); }
  void pad_to(std::size_t offset) { out_.resize(offset, 0); }

 private:
  void little(std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  std::vector<std::uint8_t>& out_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> data) : data_(data) {}

  std::size_t position() const noexcept { return pos_; }

  std::span<const std::uint8_t> take(std::size_t n, const char* what) {
    if (n > data_.size() - pos_) {
      fail(ErrorCode::TruncatedFile, std::string("file ends inside ") + what + " at byte " +
                                         std::to_string(pos_));
    }
    auto s = data_.subspan(pos_, n);
    pos_ += n;
    return s;
  }
  std::uint8_t u8(const char* what) { return take(1, what)[0]; }
  std::uint32_t u32(const char* what) { return static_cast<std::uint32_t>(little(take(4, what))); }
  std::uint64_t u64(const char* what) { return little(take(8, what)); }

 private:
  static std::uint64_t little(std::span<const std::uint8_t> b) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < b.size(); ++i) v |= std::uint64_t{b[i]} << (8 * i);
    return v;
  }
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

struct IndexEntry {
  std::string name;
  DType dtype;
  std::vector<std::size_t> shape;
  std::uint64_t offset;
  std::uint64_t length;
};

std::size_t index_bytes(const std::string& name, std::size_t rank) {
  return 4 + name.size() + 2 + 8 * rank + 16;
}

}  // namespace

std::vector<std::uint8_t> encode_container(const Checkpoint& ckpt) {
  if (ckpt.size() > std::numeric_limits<std::uint32_t>::max()) {
    fail(ErrorCode::InvalidArgument, "too many tensors for one container");
  }
  std::uint64_t index_end = kHeaderBytes;
  for (const auto& [name, entry] : ckpt) index_end += index_bytes(name, entry.rank);

  std::vector<std::uint8_t> out;
  Writer w(out);
  w.bytes(kMagic.data(), kMagic.size());
  w.u32(kContainerVersion);
  w.u32(static_cast<std::uint32_t>(ckpt.size()));
  std::uint64_t offset = align8(index_end);
  for (const auto& [name, entry] : ckpt) {
    if (name.size() > std::numeric_limits<std::uint32_t>::max()) {
      fail(ErrorCode::InvalidArgument, "tensor name too long");
    }
    const std::uint64_t length = entry.values.size() * dtype_size(entry.dtype);
    w.u32(static_cast<std::uint32_t>(name.size()));
    w.bytes(name.data(), name.size());
    w.u8(static_cast<std::uint8_t>(entry.dtype));
    w.u8(entry.rank);
    for (std::size_t d : entry.shape()) w.u64(d);
    w.u64(offset);
    w.u64(length);
    offset = align8(offset + length);
  }

  out.reserve(static_cast<std::size_t>(offset));
  for (const auto& [name, entry] : ckpt) {
    w.pad_to(static_cast<std::size_t>(align8(out.size())));
    for (double v : entry.values.values()) {
      if (entry.dtype == DType::f32) {
        w.u32(std::bit_cast<std::uint32_t>(static_cast<float>(v)));
      } else {
        w.u64(std::bit_cast<std::uint64_t>(v));
      }
    }
  }
  return out;
}

Checkpoint decode_container(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  const auto magic = r.take(4, "magic");
  if (!std::equal(magic.begin(), magic.end(), kMagic.begin())) {
    fail(ErrorCode::BadMagic, "not a WGT1 container");
  }
  const std::uint32_t version = r.u32("header");
  if (version != kContainerVersion) {
    fail(ErrorCode::UnsupportedVersion, "container version " + std::to_string(version));
  }
  const std::uint32_t count = r.u32("header");

  std::vector<IndexEntry> index;
  for (std::uint32_t i = 0; i < count; ++i) {
    IndexEntry e;
    const std::uint32_t name_len = r.u32("index");
    const auto name = r.take(name_len, "index");
    e.name.assign(name.begin(), name.end());
    if (!index.empty() && !(index.back().name < e.name)) {
      fail(ErrorCode::NameOrderViolation,
           "'" + e.name + "' does not sort after '" + index.back().name + "'");
    }
    const std::uint8_t dtype = r.u8("index");
    if (dtype > 1) fail(ErrorCode::MalformedHeader, "unknown dtype code " + std::to_string(dtype));
    e.dtype = static_cast<DType>(dtype);
    const std::uint8_t rank = r.u8("index");
    if (rank < 1 || rank > 3) fail(ErrorCode::MalformedHeader, "rank " + std::to_string(rank));
    std::uint64_t elements = 1;
    for (std::uint8_t k = 0; k < rank; ++k) {
      const std::uint64_t d = r.u64("index");
      if (d == 0) fail(ErrorCode::MalformedHeader, "zero dim in '" + e.name + "'");
      if (elements > std::numeric_limits<std::uint64_t>::max() / 8 / d) {
        fail(ErrorCode::MalformedHeader, "dims of '" + e.name + "' overflow");
      }
      elements *= d;
      e.shape.push_back(static_cast<std::size_t>(d));
    }
    e.offset = r.u64("index");
    e.length = r.u64("index");
    if (e.length != elements * dtype_size(e.dtype)) {
      fail(ErrorCode::MalformedHeader, "data length of '" + e.name + "' disagrees with its dims");
    }
    index.push_back(std::move(e));
  }

  std::uint64_t expected = align8(r.position());
  const std::uint64_t size = bytes.size();
  for (const IndexEntry& e : index) {
    if (e.offset < expected) {
      fail(ErrorCode::OverlappingSegments, "payload of '" + e.name + "' starts at " +
                                               std::to_string(e.offset) + ", before byte " +
                                               std::to_string(expected));
    }
    if (e.offset != expected) {
      fail(ErrorCode::MalformedHeader, "payload of '" + e.name + "' is not at the next aligned offset");
    }
    if (e.offset > size || e.length > size - e.offset) {
      fail(ErrorCode::TruncatedFile, "payload of '" + e.name + "' runs past the end of the file");
    }
    expected = align8(e.offset + e.length);
  }
  const std::uint64_t end = index.empty() ? r.position() : index.back().offset + index.back().length;
  if (size != end) {
    fail(ErrorCode::MalformedHeader, std::to_string(size - end) + " trailing bytes");
  }

  Checkpoint ckpt;
  for (IndexEntry& e : index) {
    std::vector<double> values(static_cast<std::size_t>(e.length / dtype_size(e.dtype)));
    const std::uint8_t* p = bytes.data() + e.offset;
    for (double& v : values) {
      std::uint64_t bits = 0;
      const std::size_t n = dtype_size(e.dtype);
      for (std::size_t i = 0; i < n; ++i) bits |= std::uint64_t{p[i]} << (8 * i);
      p += n;
      v = e.dtype == DType::f32
              ? static_cast<double>(std::bit_cast<float>(static_cast<std::uint32_t>(bits)))
              : std::bit_cast<double>(bits);
    }
    ckpt.insert(std::move(e.name), make_entry(e.dtype, e.shape, std::move(values)));
  }
  return ckpt;
}

std::size_t write_container(const Checkpoint& ckpt, std::ostream& out) {
  const auto bytes = encode_container(ckpt);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) fail(ErrorCode::IoFailure, "write failed");
  return bytes.size();
}

Checkpoint read_container(std::istream& in) {
  std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                  std::istreambuf_iterator<char>()};
  if (in.bad()) fail(ErrorCode::IoFailure, "read failed");
  return decode_container(bytes);
}

void save_container(const Checkpoint& ckpt, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoFailure, "cannot open '" + path.string() + "' for writing");
  write_container(ckpt, out);
  out.close();
  if (!out) fail(ErrorCode::IoFailure, "cannot finish writing '" + path.string() + "'");
}

Checkpoint load_container(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoFailure, "cannot open '" + path.string() + "'");
  return read_container(in);
}

}  // namespace wavexfer
