"""Root level operations including hyperparams and a runner that picks up commands from the terminal."""
