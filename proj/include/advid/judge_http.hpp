#pragma once

#include <memory>
#include <string>

#include "advid/evaluation.hpp"

namespace advid {

struct HttpJudgeConfig {
    std::string base_url;   // from JUDGE_API_BASE when empty
    std::string api_key;    // from JUDGE_API_KEY when empty
    std::string model = "gpt-4o-mini";
    int max_retries = 3;
    double backoff_initial_sec = 0.5;
    double timeout_sec = 30.0;
};

/// Chat-completion-backed judge. Sends the QA evaluation prompt and parses
/// the structured {"pred": "yes"|"no", "score": number} reply. Malformed
/// replies are retried up to max_retries, then raise JudgeProtocolError;
/// transport failures retry with exponential backoff.
class HttpJudge : public JudgeClient {
public:
    explicit HttpJudge(HttpJudgeConfig config);
    ~HttpJudge() override;

    JudgeVerdict judge(const std::string& question, const std::string& reference,
                       const std::string& prediction) override;

    std::string judge_model_id() const override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Chat-completion-backed caption generator sharing the judge transport.
class HttpLlmClient : public LlmClient {
public:
    explicit HttpLlmClient(HttpJudgeConfig config);
    ~HttpLlmClient() override;

    std::string complete(const std::string& system_prompt,
                         const std::string& user_prompt) override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Pull a verdict object out of a judge reply. The reply may wrap the JSON
/// object in prose; the first parseable object with the required fields
/// wins. Throws JudgeProtocolError when none is found.
JudgeVerdict parse_judge_reply(const std::string& reply);

}  // namespace advid
