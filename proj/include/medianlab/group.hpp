#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <typeinfo>
#include <unordered_map>
#include <utility>
#include <vector>

#include "medianlab/caps.hpp"

namespace medianlab {

[[noreturn]] void throw_model_mismatch(const char* expected);

// Value interface implemented by each model's element representation.
// equals() must reject foreign dynamic types (return false), hash() must be
// stable across runs and equal on equal elements.
class ElementBase {
 public:
  virtual ~ElementBase() = default;
  virtual bool equals(const ElementBase& other) const = 0;
  virtual std::size_t hash() const = 0;
  virtual std::string str() const = 0;
};

class Element {
 public:
  Element() = default;
  explicit Element(std::shared_ptr<const ElementBase> impl) : impl_(std::move(impl)) {}

  bool valid() const { return static_cast<bool>(impl_); }
  const ElementBase& base() const { return *impl_; }
  // Downcast to a concrete element type; throws ModelMismatch on failure.
  template <class T>
  const T& as() const {
    const T* p = dynamic_cast<const T*>(impl_.get());
    if (p == nullptr) throw_model_mismatch(typeid(T).name());
    return *p;
  }

  bool operator==(const Element& other) const { return impl_->equals(*other.impl_); }
  bool operator!=(const Element& other) const { return !(*this == other); }
  std::size_t hash() const { return impl_->hash(); }
  std::string str() const { return impl_->str(); }

 private:
  std::shared_ptr<const ElementBase> impl_;
};

template <class T, class... Args>
Element make_element(Args&&... args) {
  return Element(std::make_shared<T>(std::forward<Args>(args)...));
}

struct Generator {
  std::string name;  // lowercase; capitalizing the first letter names the inverse
  Element value;
};

// A group model: immutable once constructed, safe to share across threads.
class Group {
 public:
  virtual ~Group() = default;
  virtual std::string name() const = 0;
  virtual Element identity() const = 0;
  virtual Element mul(const Element& a, const Element& b) const = 0;
  virtual Element inv(const Element& a) const = 0;
  // Positive generators only; symmetric closure is derived.
  virtual std::vector<Generator> generators() const = 0;
  // True when Cayley BFS over the generators makes sense (finitely generated
  // model with decidable equality).
  virtual bool enumerable() const { return true; }
  // Exact word length where a closed form exists (free, free-abelian).
  virtual std::optional<long long> length_oracle(const Element& e) const {
    (void)e;
    return std::nullopt;
  }
  // Parses the model's element text format. Default: word in generator names.
  virtual Element parse(const std::string& text) const;
  // Deterministic random element for axiom sampling. Default: random word.
  virtual Element random_element(std::mt19937_64& rng, int word_length) const;

  Element power(const Element& e, long long n) const;
  // Word over generator names: tokens split on whitespace and '*', each
  // NAME, NAME^k or capitalized-NAME for the inverse. Single-letter models
  // also accept the compact form "abA". "1" and "e" denote the identity.
  Element evaluate_word(const std::string& word) const;
  std::vector<Generator> symmetric_generators() const;
  Element generator_by_name(const std::string& name) const;
};

// Tokenizer shared by word evaluation and the presentations module.
// Returns (name, exponent) pairs; throws ParseError with column positions.
std::vector<std::pair<std::string, long long>> tokenize_word(const std::string& word);

// Exact distance to identity in the word metric: length oracle when present,
// otherwise Cayley BFS (CapExceeded past caps.ball_cap states, NotEnumerable
// when the model does not support BFS).
long long word_length(const Group& g, const Element& e, const Caps& caps = default_caps());

// Least k in 1..bound with e^k = identity, or nullopt (order exceeds bound).
std::optional<long long> order_of(const Group& g, const Element& e, long long bound);

// Elements of the closed ball of the given radius, in BFS discovery order
// (deterministic). Throws NotEnumerable or CapExceeded.
std::vector<Element> enumerate_ball(const Group& g, int radius,
                                    const Caps& caps = default_caps());

// Hash-bucketed element set (hash collisions resolved by exact equality).
class ElementSet {
 public:
  bool insert(const Element& e);
  bool contains(const Element& e) const;
  std::size_t size() const { return size_; }

 private:
  std::unordered_map<std::size_t, std::vector<Element>> buckets_;
  std::size_t size_ = 0;
};

// Registry: "free:k", "zk:k", "heisenberg", "lamplighter", "GI:I=...",
// "surface:g", "T", "ext:<cocycle name>".
std::unique_ptr<Group> make_group(const std::string& spec);

}  // namespace medianlab
