#pragma once

namespace spectral {

enum class Family { hermite, laguerre };

}  // namespace spectral
