#pragma once

#include <string>

#include "advid/captions.hpp"

namespace advid {

// Versioned prompt templates for the LLM-backed paths. The judges expect a
// structured JSON object back; the caption generator expects a bare sentence.

extern const char* const kVideoQaJudgeSystemPromptV1;
extern const char* const kCaptionScoreJudgeSystemPromptV1;
extern const char* const kCaptionGeneratorSystemPromptV1;

std::string render_videoqa_judge_user_prompt(const std::string& question,
                                             const std::string& reference,
                                             const std::string& prediction);

std::string render_caption_score_user_prompt(const std::string& reference_caption,
                                             const std::string& predicted_caption);

std::string render_caption_generator_user_prompt(const QAPair& qa);

}  // namespace advid
