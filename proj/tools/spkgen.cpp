// spkgen: generate SPk datasets and profile their long-distance-dependency
// characteristics (mutual information vs. symbol distance).

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "spk/generator.hpp"
#include "spk/profiler.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitInvalidStrings = 1;
constexpr int kExitParse = 2;
constexpr int kExitEmptyLanguage = 3;
constexpr int kExitIo = 4;
constexpr int kExitInternal = 70;

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw spk::IoError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw spk::IoError("cannot open output file: " + path);
    out << content;
    if (!out) throw spk::IoError("write failed: " + path);
}

std::string file_hash_hex(const std::string& path) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(read_file(path))));
    return buf;
}

std::string default_out_dir() {
    const char* env = std::getenv("SPKGEN_OUT_DIR");
    return env ? env : ".";
}

/// Strips header comments and newlines from a dataset/corpus file, leaving
/// the raw symbol stream.
std::string load_corpus_bytes(const std::string& path) {
    std::string out;
    for (const auto& line : spk::read_dataset_lines(path)) out += line;
    return out;
}

struct GenerateArgs {
    std::string grammar_path;
    std::size_t min_len = 60;
    std::size_t max_len = 100;
    std::size_t count = 1000;
    std::uint64_t seed = 0;
    std::string out_dir = default_out_dir();
    std::string name;
    std::string split;  // "0.8,0.1,0.1" or empty
    unsigned threads = 1;
    std::size_t state_cap = spk::PiecewiseDfa::kDefaultStateCap;
};

int run_generate(const GenerateArgs& a) {
    spk::SpkGrammar g = spk::load_grammar(a.grammar_path);
    spk::LengthPlan plan{a.min_len, a.max_len, a.count};
    spk::Dataset d = spk::generate_dataset(g, plan, a.seed, a.threads, a.state_cap);

    std::string name = a.name.empty() ? fs::path(a.grammar_path).stem().string() : a.name;
    fs::create_directories(a.out_dir);
    std::string base = (fs::path(a.out_dir) / name).string();
    spk::write_dataset(d, g.alphabet, base + ".txt");

    if (!a.split.empty()) {
        double fr[3];
        if (std::sscanf(a.split.c_str(), "%lf,%lf,%lf", &fr[0], &fr[1], &fr[2]) != 3) {
            throw spk::ParseError("--split expects three comma-separated fractions");
        }
        auto parts = spk::split_dataset(d, fr[0], fr[1], fr[2]);
        const char* suffix[3] = {".train.txt", ".valid.txt", ".test.txt"};
        for (int i = 0; i < 3; ++i) {
            spk::write_dataset(parts[i], g.alphabet, base + suffix[i]);
        }
    }

    std::size_t dataset_size = 0;
    for (const auto& s : d.strings) dataset_size += s.size();
    std::cout << "strings=" << d.strings.size() << " dataset_size=" << dataset_size
              << " fingerprint=" << d.grammar_fingerprint << "\n";
    return 0;
}

struct ProfileArgs {
    std::string input_path;
    std::size_t max_distance = 0;
    std::string estimator = "grassberger";
    double log_floor = 0.0;
    std::string output;  // empty: stdout
    unsigned threads = 1;
};

int run_profile(const ProfileArgs& a) {
    std::string bytes = load_corpus_bytes(a.input_path);
    auto corpus = spk::ProfiledCorpus::from_bytes(bytes);
    auto profile = spk::ldd_profile(corpus, a.max_distance, spk::parse_estimator(a.estimator),
                                    a.threads);
    std::string csv = spk::profile_to_csv(profile, a.log_floor);
    if (a.output.empty()) {
        std::cout << csv;
    } else {
        write_file(a.output, csv);
        std::cout << "rows=" << profile.max_distance() << " output=" << a.output << "\n";
    }
    return 0;
}

struct ValidateArgs {
    std::string grammar_path;
    std::string input_path;
};

int run_validate(const ValidateArgs& a) {
    spk::SpkGrammar g = spk::load_grammar(a.grammar_path);
    spk::PiecewiseDfa dfa = spk::PiecewiseDfa::compile(g);
    auto lines = spk::read_dataset_lines(a.input_path);
    if (lines.empty()) {
        std::cerr << "warning: no strings found in " << a.input_path << "\n";
    }
    std::size_t invalid = 0, disagreements = 0;
    for (const auto& line : lines) {
        spk::SymbolString w = g.alphabet.encode(line);
        bool dfa_ok = dfa.accepts(w);
        bool oracle_ok = spk::oracle_is_valid(g, w);
        if (dfa_ok != oracle_ok) ++disagreements;
        if (!oracle_ok) ++invalid;
    }
    std::cout << "checked=" << lines.size() << " invalid=" << invalid
              << " disagreements=" << disagreements << "\n";
    if (disagreements) {
        std::cerr << "error: DFA and brute-force oracle disagree; this is a tool bug\n";
        return kExitInternal;
    }
    return invalid ? kExitInvalidStrings : 0;
}

struct ExperimentArgs {
    std::string recipe_path;
    std::string out_dir = default_out_dir();
    unsigned threads = 1;
};

int run_experiment(const ExperimentArgs& a) {
    json recipe;
    try {
        recipe = json::parse(read_file(a.recipe_path));
    } catch (const json::exception& e) {
        throw spk::ParseError(std::string("bad recipe: ") + e.what());
    }

    const std::string name = recipe.at("name").get<std::string>();
    const std::uint64_t default_seed = recipe.value("seed", 0ULL);
    const std::string estimator_name = recipe.value("estimator", std::string("grassberger"));
    spk::Estimator est = spk::parse_estimator(estimator_name);
    fs::path recipe_dir = fs::path(a.recipe_path).parent_path();

    fs::path bundle_dir = fs::path(a.out_dir) / name;
    std::vector<fs::path> written;
    try {
        fs::create_directories(bundle_dir);
        std::vector<std::pair<std::string, fs::path>> artifacts;
        for (const auto& curve : recipe.at("curves")) {
            const std::string label = curve.at("label").get<std::string>();
            fs::path grammar_path = recipe_dir / curve.at("grammar").get<std::string>();
            spk::SpkGrammar g = spk::load_grammar(grammar_path.string());
            spk::LengthPlan plan{curve.at("min_len").get<std::size_t>(),
                                 curve.at("max_len").get<std::size_t>(),
                                 curve.at("count").get<std::size_t>()};
            std::uint64_t seed = curve.value("seed", default_seed);
            std::size_t max_distance = curve.value(
                "max_distance", recipe.value("max_distance", std::size_t{4} * plan.max_len));

            spk::Dataset d = spk::generate_dataset(g, plan, seed, a.threads);
            spk::Corpus corpus = spk::flatten(d);
            max_distance = std::min(max_distance, corpus.size() - 1);
            auto profiled = spk::ProfiledCorpus::from_ids(corpus.symbols, g.alphabet.size());
            auto profile = spk::ldd_profile(profiled, max_distance, est, a.threads);

            fs::path csv_path = bundle_dir / (label + ".csv");
            write_file(csv_path.string(), spk::profile_to_csv(profile));
            written.push_back(csv_path);
            artifacts.emplace_back(label, csv_path);
            std::cerr << "curve " << label << ": strings=" << d.strings.size()
                      << " corpus=" << corpus.size() << " rows=" << max_distance << "\n";
        }

        std::string manifest;
        for (const auto& [label, path] : artifacts) {
            manifest += file_hash_hex(path.string()) + "  " + path.filename().string() + "\n";
        }
        fs::path manifest_path = bundle_dir / "manifest.txt";
        write_file(manifest_path.string(), manifest);
        written.push_back(manifest_path);
    } catch (...) {
        std::error_code ec;
        for (const auto& p : written) fs::remove(p, ec);
        throw;
    }

    std::cout << "experiment=" << name << " curves=" << recipe.at("curves").size()
              << " out=" << bundle_dir.string() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"SPk dataset generator and LDD mutual-information profiler"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* cgen = app.add_subcommand("generate", "Generate a dataset from a grammar file");
    cgen->add_option("--grammar", gen.grammar_path, "SPk grammar file")->required();
    cgen->add_option("--min-len", gen.min_len, "Minimum string length");
    cgen->add_option("--max-len", gen.max_len, "Maximum string length");
    cgen->add_option("--count", gen.count, "Number of strings");
    cgen->add_option("--seed", gen.seed, "Master rng seed");
    cgen->add_option("--out", gen.out_dir, "Output directory");
    cgen->add_option("--name", gen.name, "Output base name (default: grammar file stem)");
    cgen->add_option("--split", gen.split, "train,valid,test fractions, e.g. 0.8,0.1,0.1");
    cgen->add_option("--threads", gen.threads, "Worker thread count");
    cgen->add_option("--state-cap", gen.state_cap, "DFA state cap");

    ProfileArgs prof;
    auto* cprof = app.add_subcommand("profile", "Compute the MI-vs-distance curve of a corpus");
    cprof->add_option("--input", prof.input_path, "Corpus or dataset file")->required();
    cprof->add_option("--max-distance", prof.max_distance, "Largest distance D")->required();
    cprof->add_option("--estimator", prof.estimator, "grassberger|plugin");
    cprof->add_option("--log-floor", prof.log_floor, "Clamp floor for log-log plot data");
    cprof->add_option("--output", prof.output, "CSV path (default: stdout)");
    cprof->add_option("--threads", prof.threads, "Worker thread count");

    ValidateArgs val;
    auto* cval = app.add_subcommand("validate", "Check every dataset string against the grammar");
    cval->add_option("--grammar", val.grammar_path, "SPk grammar file")->required();
    cval->add_option("--input", val.input_path, "Dataset file")->required();

    ExperimentArgs exp;
    auto* cexp = app.add_subcommand("experiment", "Run a generate+profile recipe bundle");
    cexp->add_option("--recipe", exp.recipe_path, "Recipe JSON file")->required();
    cexp->add_option("--out", exp.out_dir, "Output directory");
    cexp->add_option("--threads", exp.threads, "Worker thread count");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cgen->parsed()) return run_generate(gen);
        if (cprof->parsed()) return run_profile(prof);
        if (cval->parsed()) return run_validate(val);
        if (cexp->parsed()) return run_experiment(exp);
    } catch (const spk::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const spk::StateCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const spk::EmptyLanguageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEmptyLanguage;
    } catch (const spk::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
