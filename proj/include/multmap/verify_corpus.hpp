#pragma once

#include <string>
#include <vector>

namespace multmap {

struct CorpusItem {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Deliberate corruption hooks for exercising the failure path end to end; the
// sign flip breaks the minor-law items and nothing else.
enum class InjectedFault { none, rees_sign_flip };

// Built-in verification corpus: the worked identities, the structural kernel
// results, the minor and hypersurface laws, and randomized spot checks.
// `filter` keeps only items whose name contains the substring.
std::vector<CorpusItem> run_verify_corpus(const std::string& filter = {},
                                          InjectedFault fault = InjectedFault::none);

} // namespace multmap
