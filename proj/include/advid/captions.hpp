#pragma once

#include <string>
#include <vector>

namespace advid {

struct QAPair {
    std::string question_id;
    std::string question;
    std::string answer;
};

/// Captions attached to one video; when synthesized from QA pairs there is
/// exactly one caption per pair.
struct CaptionSet {
    std::vector<std::string> captions;

    bool empty() const { return captions.empty(); }
    std::size_t size() const { return captions.size(); }
};

}  // namespace advid
