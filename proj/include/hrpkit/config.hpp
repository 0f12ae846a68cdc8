#ifndef HRPKIT_CONFIG_HPP
#define HRPKIT_CONFIG_HPP

namespace hrpkit {

// Starting working precision in bits for certified numeric routines.
// Escalation loops double it on demand; this only sets the first attempt.
long default_start_bits();
void set_default_start_bits(long bits);

// Hard ceiling for precision escalation (bits).
long precision_ceiling_bits();
void set_precision_ceiling_bits(long bits);

} // namespace hrpkit

#endif
