# PDM Oscillator-Shaped Quantum Well - Library Package
