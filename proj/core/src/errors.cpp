#include "sgholder/errors.hpp"
