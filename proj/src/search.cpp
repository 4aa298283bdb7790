#include "subsplit/search.hpp"

#include <string>

namespace subsplit {

int default_workers()
{
    const char* env = std::getenv("SUBSPLIT_WORKERS");
    if (!env || !*env)
        return 1;
    try {
        int w = std::stoi(env);
        return w > 0 ? w : 1;
    } catch (...) {
        return 1;
    }
}

} // namespace subsplit
