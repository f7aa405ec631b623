#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "stylekit/core/types.h"
#include "stylekit/llm/gateway.h"
#include "stylekit/profile/profile_store.h"

namespace stylekit::eval {

// Model under evaluation. Failures surface as exceptions, never as an empty
// string.
class Responder {
 public:
  virtual ~Responder() = default;
  virtual std::string Respond(const DialogueContext& context, const std::string& style,
                              const std::optional<std::string>& teacher_force_prefix) = 0;
};

class FunctionResponder : public Responder {
 public:
  using Fn = std::function<std::string(const DialogueContext&, const std::string&,
                                       const std::optional<std::string>&)>;
  explicit FunctionResponder(Fn fn) : fn_(std::move(fn)) {}
  std::string Respond(const DialogueContext& context, const std::string& style,
                      const std::optional<std::string>& prefix) override {
    return fn_(context, style, prefix);
  }

 private:
  Fn fn_;
};

// Text after the last "# Response in {style} style" header line, or the whole
// reply when the header is absent; cleaned like synthesized labels.
std::string ExtractResponse(std::string_view reply, std::string_view style);

struct GatewayResponderOptions {
  RecordFormat format = RecordFormat::kRecite;
  bool include_name_line = true;
  double temperature = 0.7;
  int max_tokens = 512;
  std::uint64_t seed = 0;
};

// Renders the training-time prompt for the configured format. A teacher-force
// prefix is sent as a trailing assistant message for the backend to continue.
// The no_recite format reads profiles from `profiles`.
class GatewayResponder : public Responder {
 public:
  GatewayResponder(llm::Gateway& gateway, GatewayResponderOptions options,
                   const profile::ProfileStore* profiles = nullptr)
      : gateway_(gateway), options_(options), profiles_(profiles) {}

  std::string Respond(const DialogueContext& context, const std::string& style,
                      const std::optional<std::string>& prefix) override;

 private:
  llm::Gateway& gateway_;
  GatewayResponderOptions options_;
  const profile::ProfileStore* profiles_;
};

}  // namespace stylekit::eval
