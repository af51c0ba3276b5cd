#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "advid/captions.hpp"

namespace advid {

/// One question asked of a target model, with its answers on the clean and
/// the adversarial video.
struct ResponseRecord {
    std::string video_id;
    std::string question_id;
    std::string question;
    std::string reference_answer;
    std::string prediction_clean;
    std::string prediction_adv;
    std::string target_model_id;
};

struct JudgeVerdict {
    int correct = 0;      // 0 or 1
    double score = 0.0;   // [0, 5]
};

/// Per-target metrics plus the cross-target average.
struct TargetMetrics {
    std::string target_model_id;
    double accuracy_clean = 0.0;  // %
    double accuracy_adv = 0.0;    // %
    double score_clean = 0.0;
    double score_adv = 0.0;
    double asr = 0.0;  // %
    std::size_t record_count = 0;
    std::size_t clean_correct_count = 0;
};

struct MetricsReport {
    std::vector<TargetMetrics> per_target;
    double aasr = 0.0;  // arithmetic mean of per-target ASR, %
};

// ---------------------------------------------------------------------------
// Caption synthesis

/// Minimal chat-completion client used for caption generation and judging.
class LlmClient {
public:
    virtual ~LlmClient() = default;
    virtual std::string complete(const std::string& system_prompt,
                                 const std::string& user_prompt) = 0;
};

struct CaptionResult {
    std::string caption;
    bool used_fallback = false;  // set when the LLM path failed
};

/// Merge a QA pair into one declarative sentence. With a client the
/// generation prompt is used; without one (or when the client fails) the
/// template fallback "Regarding the question '<q>', the answer is '<a>'."
/// is emitted.
CaptionResult generate_caption(const QAPair& qa, LlmClient* generator = nullptr);

/// Synthesize one caption per QA pair.
CaptionSet synthesize_captions(const std::vector<QAPair>& pairs, LlmClient* generator = nullptr);

// ---------------------------------------------------------------------------
// Judging

class JudgeClient {
public:
    virtual ~JudgeClient() = default;

    virtual JudgeVerdict judge(const std::string& question, const std::string& reference,
                               const std::string& prediction) = 0;

    virtual std::string judge_model_id() const = 0;
};

/// Deterministic test-fixture judge: correct iff the case-folded,
/// punctuation-stripped prediction contains the reference answer token
/// sequence after crude "ing"/"s" suffix stemming; score = 5 * correct.
class StubJudge : public JudgeClient {
public:
    JudgeVerdict judge(const std::string& question, const std::string& reference,
                       const std::string& prediction) override;

    std::string judge_model_id() const override { return "stub"; }
};

enum class Which { clean, adv };

JudgeVerdict judge_response(const ResponseRecord& record, Which which, JudgeClient& judge);

/// Verdicts are cached by hash(question, reference, prediction, judge model)
/// so stochastic judges stay reproducible within and across runs.
class CachingJudge : public JudgeClient {
public:
    CachingJudge(std::shared_ptr<JudgeClient> inner, std::filesystem::path cache_file);
    ~CachingJudge() override;

    JudgeVerdict judge(const std::string& question, const std::string& reference,
                       const std::string& prediction) override;

    std::string judge_model_id() const override;

    void flush();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// ---------------------------------------------------------------------------
// Metric reducers

double compute_accuracy(const std::vector<JudgeVerdict>& verdicts);  // %
double compute_gpt_score(const std::vector<JudgeVerdict>& verdicts);

/// ASR over (clean, adv) verdict pairs: among clean-correct questions, the
/// percentage flipped to incorrect. Throws UndefinedMetricError when no
/// clean-correct pair exists.
double compute_asr(const std::vector<std::pair<JudgeVerdict, JudgeVerdict>>& paired);

double compute_aasr(const std::vector<double>& per_target_asr);

/// Mean of judged captioning scores on the 0-100 scale.
double compute_captioning_score(const std::vector<double>& judged);

/// Pearson correlation coefficient. Throws UndefinedMetricError when either
/// series is constant.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

/// Judge every record (clean and adversarial predictions) and reduce to the
/// per-target metrics table. Judge calls run on up to `workers` threads.
MetricsReport evaluate_records(const std::vector<ResponseRecord>& records, JudgeClient& judge,
                               std::size_t workers = 8);

// ---------------------------------------------------------------------------
// Record files: newline-delimited JSON

std::vector<ResponseRecord> load_response_records(const std::filesystem::path& path);
void save_response_records(const std::vector<ResponseRecord>& records,
                           const std::filesystem::path& path);

void save_metrics_report(const MetricsReport& report, const std::filesystem::path& json_path,
                         const std::filesystem::path& table_path);

/// Render the flat per-target table (one row per target model).
std::string format_metrics_table(const MetricsReport& report);

}  // namespace advid
