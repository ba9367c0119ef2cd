// LD_PRELOAD guard: any attempt to open a socket aborts the process, so a
// clean exit certifies that the command performed no network access.
#include <cstdlib>

extern "C" int socket(int, int, int) {
    std::abort();
}

extern "C" int connect(int, const void*, unsigned) {
    std::abort();
}
