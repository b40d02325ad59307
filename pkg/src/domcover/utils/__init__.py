"""Value objects, errors, timers and read/write facilities shared across domcover."""
