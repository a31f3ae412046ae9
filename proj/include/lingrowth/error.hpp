#pragma once

#include <stdexcept>
#include <string>

namespace lingrowth {

// Every failure the library raises derives from `error`; the kind lets the CLI
// map it onto an exit code without string matching.
enum class error_kind {
  parse,
  range,
  structure,
  capacity,
  domain,
  precondition,
  degenerate,
  invariant,
  model,
  generation,
  io,
};

class error : public std::runtime_error {
 public:
  error(error_kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  error_kind kind() const noexcept { return kind_; }

 private:
  error_kind kind_;
};

#define LINGROWTH_DEFINE_ERROR(name, tag)                                   \
  class name : public error {                                               \
   public:                                                                  \
    explicit name(const std::string& what) : error(error_kind::tag, what) {} \
  };

LINGROWTH_DEFINE_ERROR(parse_error, parse)
LINGROWTH_DEFINE_ERROR(range_error, range)
LINGROWTH_DEFINE_ERROR(structure_error, structure)
LINGROWTH_DEFINE_ERROR(capacity_error, capacity)
LINGROWTH_DEFINE_ERROR(domain_error, domain)
LINGROWTH_DEFINE_ERROR(precondition_error, precondition)
LINGROWTH_DEFINE_ERROR(degenerate_error, degenerate)
LINGROWTH_DEFINE_ERROR(invariant_error, invariant)
LINGROWTH_DEFINE_ERROR(model_error, model)
LINGROWTH_DEFINE_ERROR(generation_error, generation)
LINGROWTH_DEFINE_ERROR(io_error, io)

#undef LINGROWTH_DEFINE_ERROR

}  // namespace lingrowth
