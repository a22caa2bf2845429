#ifndef KNESER_CLI_HPP
#define KNESER_CLI_HPP

#include <exception>
#include <iosfwd>
#include <string>
#include <vector>

#include "kneser/kneser_graph.hpp"

namespace kneser::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitUsage = 2;

// Entry point; args excludes the program name. Data goes to out, diagnostics
// to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// 2 for precondition and usage errors, 1 for everything else.
int exit_code_for(const std::exception& e);

// The commands that operate on one graph, callable directly. Each writes a
// single JSON line and returns kExitOk or kExitAssertion; verification errors
// propagate as exceptions.
int props_command(const KneserGraph& kg, std::ostream& out);

enum class AutMethod { kEngine, kGenerators, kBoth };
int aut_command(const KneserGraph& kg, AutMethod method, std::ostream& out);

enum class Level { kVertex, kEdge, kArc, kDistance, kAll };
int transitivity_command(const KneserGraph& kg, Level level, std::ostream& out);

int connectivity_command(const KneserGraph& kg, bool certificate, std::ostream& out);

int cayley_check_command(int n, std::ostream& out);

int explore_question1_command(int n, int k, int generator_bound, std::ostream& out);
int explore_question2_command(int n_max, int k_max, bool text, std::ostream& out);

}  // namespace kneser::cli

#endif  // KNESER_CLI_HPP
