#include <array>

#include "wavexfer/error.hpp"
#include "wavexfer/policy.hpp"

namespace wavexfer {

namespace {

struct RuleRow {
  const char* pattern;
  const char* group;
  const char* axes;  // subset of "LIO": L, Din, Dout
};

AxisSet axes_from(const char* spec) {
  AxisSet s;
  for (const char* c = spec; *c != '\0'; ++c) {
    if (*c == 'L') s.insert(Axis::layers);
    if (*c == 'I') s.insert(Axis::d_in);
    if (*c == 'O') s.insert(Axis::d_out);
  }
  return s;
}

template <std::size_t N>
GroupPolicy build(const char* name, const std::array<RuleRow, N>& rows) {
  GroupPolicy p;
  p.name = name;
  p.passthrough = Passthrough::copy;
  p.hidden = DimSource{"W_q", Axis::d_in};
  p.ffn = DimSource{"W_f1", Axis::d_out};
  for (const auto& r : rows) p.rules.push_back(GroupRule{r.pattern, r.group, axes_from(r.axes)});
  return p;
}

// Per-layer matrices are stored (d_in, d_out). Biases and norm vectors stack
// into L x d x 1; embedding tables move along the hidden axis only. Anything
// unmatched (classifier biases, vocab-sized heads) is copied through.
constexpr std::array<RuleRow, 23> kBert{{
    {"encoder.layer.{}.attention.q.weight", "W_q", "LIO"},
    {"encoder.layer.{}.attention.k.weight", "W_k", "LIO"},
    {"encoder.layer.{}.attention.v.weight", "W_v", "LIO"},
    {"encoder.layer.{}.attention.o.weight", "W_o", "LIO"},
    {"encoder.layer.{}.ffn.fc1.weight", "W_f1", "LIO"},
    {"encoder.layer.{}.ffn.fc2.weight", "W_f2", "LIO"},
    {"encoder.layer.{}.attention.q.bias", "b_q", "LI"},
    {"encoder.layer.{}.attention.k.bias", "b_k", "LI"},
    {"encoder.layer.{}.attention.v.bias", "b_v", "LI"},
    {"encoder.layer.{}.attention.o.bias", "b_o", "LI"},
    {"encoder.layer.{}.ffn.fc1.bias", "b_f1", "LI"},
    {"encoder.layer.{}.ffn.fc2.bias", "b_f2", "LI"},
    {"encoder.layer.{}.attention.ln.weight", "ln1_w", "LI"},
    {"encoder.layer.{}.attention.ln.bias", "ln1_b", "LI"},
    {"encoder.layer.{}.ffn.ln.weight", "ln2_w", "LI"},
    {"encoder.layer.{}.ffn.ln.bias", "ln2_b", "LI"},
    {"embeddings.word.weight", "E_word", "O"},
    {"embeddings.position.weight", "E_pos", "O"},
    {"embeddings.token_type.weight", "E_type", "O"},
    {"embeddings.ln.weight", "ln_emb_w", "I"},
    {"embeddings.ln.bias", "ln_emb_b", "I"},
    {"pooler.weight", "W_pool", "IO"},
    {"pooler.bias", "b_pool", "I"},
}};

constexpr std::array<RuleRow, 20> kGpt{{
    {"h.{}.attn.q.weight", "W_q", "LIO"},
    {"h.{}.attn.k.weight", "W_k", "LIO"},
    {"h.{}.attn.v.weight", "W_v", "LIO"},
    {"h.{}.attn.proj.weight", "W_o", "LIO"},
    {"h.{}.mlp.fc.weight", "W_f1", "LIO"},
    {"h.{}.mlp.proj.weight", "W_f2", "LIO"},
    {"h.{}.attn.q.bias", "b_q", "LI"},
    {"h.{}.attn.k.bias", "b_k", "LI"},
    {"h.{}.attn.v.bias", "b_v", "LI"},
    {"h.{}.attn.proj.bias", "b_o", "LI"},
    {"h.{}.mlp.fc.bias", "b_f1", "LI"},
    {"h.{}.mlp.proj.bias", "b_f2", "LI"},
    {"h.{}.ln_1.weight", "ln1_w", "LI"},
    {"h.{}.ln_1.bias", "ln1_b", "LI"},
    {"h.{}.ln_2.weight", "ln2_w", "LI"},
    {"h.{}.ln_2.bias", "ln2_b", "LI"},
    {"wte.weight", "E_tok", "O"},
    {"wpe.weight", "E_pos", "O"},
    {"ln_f.weight", "lnf_w", "I"},
    {"ln_f.bias", "lnf_b", "I"},
}};

constexpr std::array<RuleRow, 23> kDeit{{
    {"blocks.{}.attn.q.weight", "W_q", "LIO"},
    {"blocks.{}.attn.k.weight", "W_k", "LIO"},
    {"blocks.{}.attn.v.weight", "W_v", "LIO"},
    {"blocks.{}.attn.proj.weight", "W_o", "LIO"},
    {"blocks.{}.mlp.fc1.weight", "W_f1", "LIO"},
    {"blocks.{}.mlp.fc2.weight", "W_f2", "LIO"},
    {"blocks.{}.attn.q.bias", "b_q", "LI"},
    {"blocks.{}.attn.k.bias", "b_k", "LI"},
    {"blocks.{}.attn.v.bias", "b_v", "LI"},
    {"blocks.{}.attn.proj.bias", "b_o", "LI"},
    {"blocks.{}.mlp.fc1.bias", "b_f1", "LI"},
    {"blocks.{}.mlp.fc2.bias", "b_f2", "LI"},
    {"blocks.{}.norm1.weight", "ln1_w", "LI"},
    {"blocks.{}.norm1.bias", "ln1_b", "LI"},
    {"blocks.{}.norm2.weight", "ln2_w", "LI"},
    {"blocks.{}.norm2.bias", "ln2_b", "LI"},
    {"patch_embed.proj.weight", "W_patch", "O"},
    {"patch_embed.proj.bias", "b_patch", "I"},
    {"cls_token", "E_cls", "O"},
    {"pos_embed", "E_pos", "O"},
    {"norm.weight", "lnf_w", "I"},
    {"norm.bias", "lnf_b", "I"},
    {"head.weight", "W_head", "I"},
}};

}  // namespace

std::vector<std::string_view> preset_names() { return {"bert-like", "gpt-like", "deit-like"}; }

GroupPolicy preset_policy(std::string_view name) {
  if (name == "bert-like") return build("bert-like", kBert);
  if (name == "gpt-like") return build("gpt-like", kGpt);
  if (name == "deit-like") return build("deit-like", kDeit);
  fail(ErrorCode::InvalidPolicy, "unknown preset '" + std::string(name) + "'");
}

}  // namespace wavexfer
