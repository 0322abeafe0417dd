#include "support.hpp"

#include <atomic>
#include <fstream>
#include <iterator>
#include <unistd.h>

namespace testsupport {

using wavexfer::Arch;
using wavexfer::Checkpoint;
using wavexfer::Dims;
using wavexfer::DType;

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_name(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

class Builder {
 public:
  Builder(std::uint64_t seed, DType dtype) : seed_(seed), dtype_(dtype) {}

  void add(const std::string& name, std::vector<std::size_t> shape) {
    std::size_t n = 1;
    for (std::size_t d : shape) n *= d;
    std::vector<double> v(n);
    std::uint64_t state = seed_ ^ hash_name(name);
    for (double& x : v) {
      state = mix(state);
      x = 0.04 * (static_cast<double>(state >> 11) * 0x1.0p-53 - 0.5);
    }
    ckpt_.insert(name, wavexfer::make_entry(dtype_, shape, std::move(v)));
  }

  Checkpoint take() { return std::move(ckpt_); }

 private:
  std::uint64_t seed_;
  DType dtype_;
  Checkpoint ckpt_;
};

}  // namespace

std::vector<double> normal_values(std::size_t n, Rng& rng) {
  std::normal_distribution<double> dist;
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

wavexfer::Tensor3 random_tensor(const Dims& dims, Rng& rng) {
  return wavexfer::Tensor3(dims, normal_values(wavexfer::element_count(dims), rng));
}

Dims random_dims(Rng& rng, std::initializer_list<std::size_t> choices) {
  std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
  Dims d{};
  for (auto& x : d) x = *(choices.begin() + pick(rng));
  return d;
}

std::string_view preset_for(ModelKind kind) {
  switch (kind) {
    case ModelKind::bert:
      return "bert-like";
    case ModelKind::gpt:
      return "gpt-like";
    default:
      return "deit-like";
  }
}

Checkpoint make_model(ModelKind kind, const Arch& arch, std::uint64_t seed, std::size_t vocab,
                      DType dtype) {
  Builder b(seed, dtype);
  const std::size_t d = arch.hidden;
  const std::size_t f = arch.ffn;
  for (std::size_t l = 0; l < arch.layers; ++l) {
    const std::string i = std::to_string(l);
    switch (kind) {
      case ModelKind::bert: {
        const std::string p = "encoder.layer." + i + ".";
        for (const char* x : {"q", "k", "v", "o"}) {
          b.add(p + "attention." + x + ".weight", {d, d});
          b.add(p + "attention." + x + ".bias", {d});
        }
        b.add(p + "ffn.fc1.weight", {d, f});
        b.add(p + "ffn.fc1.bias", {f});
        b.add(p + "ffn.fc2.weight", {f, d});
        b.add(p + "ffn.fc2.bias", {d});
        for (const char* x : {"attention.ln", "ffn.ln"}) {
          b.add(p + x + ".weight", {d});
          b.add(p + x + ".bias", {d});
        }
        break;
      }
      case ModelKind::gpt: {
        const std::string p = "h." + i + ".";
        for (const char* x : {"q", "k", "v", "proj"}) {
          b.add(p + "attn." + x + ".weight", {d, d});
          b.add(p + "attn." + x + ".bias", {d});
        }
        b.add(p + "mlp.fc.weight", {d, f});
        b.add(p + "mlp.fc.bias", {f});
        b.add(p + "mlp.proj.weight", {f, d});
        b.add(p + "mlp.proj.bias", {d});
        for (const char* x : {"ln_1", "ln_2"}) {
          b.add(p + x + ".weight", {d});
          b.add(p + x + ".bias", {d});
        }
        break;
      }
      case ModelKind::deit: {
        const std::string p = "blocks." + i + ".";
        for (const char* x : {"q", "k", "v", "proj"}) {
          b.add(p + "attn." + x + ".weight", {d, d});
          b.add(p + "attn." + x + ".bias", {d});
        }
        b.add(p + "mlp.fc1.weight", {d, f});
        b.add(p + "mlp.fc1.bias", {f});
        b.add(p + "mlp.fc2.weight", {f, d});
        b.add(p + "mlp.fc2.bias", {d});
        for (const char* x : {"norm1", "norm2"}) {
          b.add(p + x + ".weight", {d});
          b.add(p + x + ".bias", {d});
        }
        break;
      }
    }
  }
  switch (kind) {
    case ModelKind::bert:
      b.add("embeddings.word.weight", {vocab, d});
      b.add("embeddings.position.weight", {128, d});
      b.add("embeddings.token_type.weight", {2, d});
      b.add("embeddings.ln.weight", {d});
      b.add("embeddings.ln.bias", {d});
      b.add("pooler.weight", {d, d});
      b.add("pooler.bias", {d});
      b.add("mlm.decoder.bias", {vocab});
      break;
    case ModelKind::gpt:
      b.add("wte.weight", {vocab, d});
      b.add("wpe.weight", {64, d});
      b.add("ln_f.weight", {d});
      b.add("ln_f.bias", {d});
      break;
    case ModelKind::deit:
      b.add("patch_embed.proj.weight", {3 * 16 * 16, d});
      b.add("patch_embed.proj.bias", {d});
      b.add("cls_token", {1, 1, d});
      b.add("pos_embed", {1, 197, d});
      b.add("norm.weight", {d});
      b.add("norm.bias", {d});
      b.add("head.weight", {d, vocab});
      b.add("head.bias", {vocab});
      break;
  }
  return b.take();
}

std::filesystem::path temp_path(std::string_view stem) {
  static std::atomic<int> counter{0};
  return std::filesystem::temp_directory_path() /
         (std::string(stem) + "_" + std::to_string(::getpid()) + "_" +
          std::to_string(counter++) + ".wgt");
}

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace testsupport
