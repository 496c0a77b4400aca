#include "volkov/lorentz.hpp"

// Header-only for now; the translation unit anchors the library target.
namespace volkov {}
