#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qsm/app/text_source.hpp"
#include "qsm/errors.hpp"

namespace qsm::app {

namespace {

class Encoder {
 public:
  explicit Encoder(AlphabetPolicy policy) : policy_(policy) { codes_.fill(-1); }

  Symbol encode(unsigned char byte) {
    if (policy_ == AlphabetPolicy::raw) return byte;
    if (codes_[byte] < 0) {
      codes_[byte] = static_cast<int>(alphabet_.size());
      alphabet_.push_back(byte);
    }
    return static_cast<Symbol>(codes_[byte]);
  }

  std::size_t sigma() const { return policy_ == AlphabetPolicy::raw ? 256 : alphabet_.size(); }
  std::vector<unsigned char> alphabet() const { return alphabet_; }

 private:
  AlphabetPolicy policy_;
  std::array<int, 256> codes_{};
  std::vector<unsigned char> alphabet_;
};

}  // namespace

LoadedInput load_input(std::string_view text_bytes, std::string_view pattern_bytes, AlphabetPolicy policy) {
  if (text_bytes.empty()) throw DomainError("text is empty");
  if (pattern_bytes.empty()) throw DomainError("pattern is empty");
  Encoder enc(policy);
  LoadedInput out;
  out.text.symbols.reserve(text_bytes.size());
  for (char ch : text_bytes) out.text.symbols.push_back(enc.encode(static_cast<unsigned char>(ch)));
  for (char ch : pattern_bytes) out.pattern.symbols.push_back(enc.encode(static_cast<unsigned char>(ch)));
  out.text.sigma = enc.sigma();
  out.alphabet = enc.alphabet();
  return out;
}

Text load_text(std::string_view bytes, AlphabetPolicy policy) {
  if (bytes.empty()) throw DomainError("text is empty");
  Encoder enc(policy);
  Text text;
  text.symbols.reserve(bytes.size());
  for (char ch : bytes) text.symbols.push_back(enc.encode(static_cast<unsigned char>(ch)));
  text.sigma = enc.sigma();
  return text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace qsm::app
