#pragma once

#include <string>

#include "stylekit/llm/gateway.h"

namespace stylekit::llm {

// POSTs {"model", "messages": [{"role", "content"}], "temperature",
// "max_tokens", "seed"} to the endpoint and reads
// choices[0].message.content. The API key, when the named environment
// variable is set, goes out as a bearer token.
class HttpBackend : public ChatBackend {
 public:
  explicit HttpBackend(BackendConfig config);
  ChatResponse Send(const ChatRequest& request) override;
  std::string id() const override { return "live:" + url_; }

 private:
  BackendConfig config_;
  std::string url_;
  std::string scheme_host_port_;
  std::string path_;
};

}  // namespace stylekit::llm
