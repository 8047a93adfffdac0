// Reference values for the simulation tables and the tau ratio table.

/// (s0, s1, [identity, log, loglog, logit, arcsin]) tau0/tau1 ratios to two decimals.
pub const TAU_RATIOS: [(f64, f64, [f64; 5]); 8] = [
    (0.1, 0.2, [0.75, 1.5, 1.05, 1.33, 1.0]),
    (0.3, 0.4, [0.94, 1.25, 0.95, 1.07, 1.0]),
    (0.5, 0.6, [1.02, 1.22, 0.9, 0.98, 1.0]),
    (0.7, 0.8, [1.15, 1.31, 0.82, 0.87, 1.0]),
    (0.8, 0.7, [0.87, 0.76, 1.22, 1.15, 1.0]),
    (0.6, 0.5, [0.98, 0.82, 1.11, 1.02, 1.0]),
    (0.4, 0.3, [1.07, 0.8, 1.05, 0.94, 1.0]),
    (0.2, 0.1, [1.33, 0.67, 0.95, 0.75, 1.0]),
];

/// Type I error rates in grid order, columns [identity, log, loglog, logit, arcsin].
pub const TYPE_ONE_T1: [[f64; 5]; 45] = [
    [0.01, 0.098, 0.033, 0.033, 0.033],
    [0.044, 0.098, 0.044, 0.044, 0.044],
    [0.054, 0.115, 0.054, 0.054, 0.054],
    [0.091, 0.091, 0.033, 0.033, 0.091],
    [0.072, 0.072, 0.072, 0.072, 0.072],
    [0.024, 0.058, 0.058, 0.058, 0.058],
    [0.047, 0.084, 0.047, 0.047, 0.047],
    [0.059, 0.059, 0.032, 0.059, 0.059],
    [0.078, 0.078, 0.04, 0.04, 0.04],
    [0.112, 0.112, 0.033, 0.033, 0.112],
    [0.021, 0.072, 0.04, 0.072, 0.04],
    [0.053, 0.053, 0.053, 0.053, 0.053],
    [0.044, 0.066, 0.044, 0.044, 0.044],
    [0.075, 0.075, 0.048, 0.048, 0.048],
    [0.117, 0.117, 0.024, 0.024, 0.057],
    [0.009, 0.098, 0.033, 0.033, 0.033],
    [0.044, 0.098, 0.044, 0.044, 0.044],
    [0.054, 0.115, 0.054, 0.054, 0.054],
    [0.09, 0.09, 0.033, 0.033, 0.09],
    [0.072, 0.072, 0.072, 0.072, 0.072],
    [0.024, 0.058, 0.058, 0.058, 0.058],
    [0.048, 0.085, 0.048, 0.048, 0.048],
    [0.06, 0.06, 0.032, 0.06, 0.06],
    [0.078, 0.078, 0.04, 0.04, 0.04],
    [0.112, 0.112, 0.034, 0.034, 0.112],
    [0.02, 0.072, 0.04, 0.072, 0.04],
    [0.053, 0.053, 0.053, 0.053, 0.053],
    [0.044, 0.066, 0.044, 0.044, 0.044],
    [0.075, 0.075, 0.048, 0.048, 0.048],
    [0.117, 0.117, 0.024, 0.024, 0.058],
    [0.01, 0.098, 0.033, 0.033, 0.033],
    [0.044, 0.098, 0.044, 0.044, 0.044],
    [0.054, 0.115, 0.054, 0.054, 0.054],
    [0.091, 0.091, 0.033, 0.033, 0.091],
    [0.072, 0.072, 0.072, 0.072, 0.072],
    [0.024, 0.058, 0.058, 0.058, 0.058],
    [0.048, 0.085, 0.048, 0.048, 0.048],
    [0.06, 0.06, 0.033, 0.06, 0.06],
    [0.079, 0.079, 0.04, 0.04, 0.04],
    [0.112, 0.112, 0.034, 0.034, 0.112],
    [0.02, 0.072, 0.04, 0.072, 0.04],
    [0.053, 0.053, 0.053, 0.053, 0.053],
    [0.044, 0.067, 0.044, 0.044, 0.044],
    [0.076, 0.076, 0.048, 0.048, 0.048],
    [0.118, 0.118, 0.024, 0.024, 0.058],
];

/// Type I error rates in grid order, columns [identity, log, loglog, logit, arcsin].
pub const TYPE_ONE_S1: [[f64; 5]; 45] = [
    [0.024, 0.084, 0.046, 0.07, 0.045],
    [0.044, 0.079, 0.039, 0.055, 0.049],
    [0.062, 0.085, 0.037, 0.046, 0.055],
    [0.096, 0.107, 0.035, 0.041, 0.056],
    [0.075, 0.075, 0.075, 0.075, 0.075],
    [0.026, 0.074, 0.046, 0.065, 0.044],
    [0.043, 0.07, 0.042, 0.054, 0.048],
    [0.056, 0.074, 0.041, 0.049, 0.052],
    [0.07, 0.086, 0.039, 0.046, 0.056],
    [0.118, 0.118, 0.022, 0.031, 0.104],
    [0.029, 0.067, 0.047, 0.061, 0.045],
    [0.044, 0.064, 0.045, 0.053, 0.048],
    [0.053, 0.066, 0.044, 0.049, 0.051],
    [0.064, 0.072, 0.042, 0.046, 0.055],
    [0.088, 0.108, 0.026, 0.026, 0.062],
    [0.024, 0.084, 0.046, 0.07, 0.045],
    [0.044, 0.079, 0.039, 0.055, 0.049],
    [0.062, 0.085, 0.037, 0.046, 0.055],
    [0.096, 0.106, 0.034, 0.04, 0.056],
    [0.075, 0.075, 0.075, 0.075, 0.075],
    [0.025, 0.074, 0.046, 0.064, 0.044],
    [0.043, 0.07, 0.042, 0.054, 0.048],
    [0.056, 0.073, 0.041, 0.049, 0.052],
    [0.07, 0.085, 0.039, 0.046, 0.056],
    [0.117, 0.117, 0.022, 0.031, 0.104],
    [0.029, 0.067, 0.047, 0.061, 0.044],
    [0.044, 0.064, 0.045, 0.053, 0.049],
    [0.053, 0.067, 0.044, 0.05, 0.052],
    [0.064, 0.072, 0.042, 0.046, 0.055],
    [0.088, 0.108, 0.026, 0.026, 0.063],
    [0.024, 0.085, 0.046, 0.071, 0.045],
    [0.044, 0.079, 0.039, 0.055, 0.049],
    [0.062, 0.086, 0.037, 0.047, 0.056],
    [0.096, 0.107, 0.035, 0.041, 0.057],
    [0.075, 0.075, 0.075, 0.075, 0.075],
    [0.026, 0.073, 0.046, 0.064, 0.044],
    [0.043, 0.07, 0.042, 0.054, 0.048],
    [0.056, 0.074, 0.041, 0.049, 0.053],
    [0.07, 0.086, 0.039, 0.046, 0.056],
    [0.117, 0.117, 0.022, 0.031, 0.103],
    [0.029, 0.067, 0.047, 0.06, 0.044],
    [0.044, 0.064, 0.044, 0.053, 0.048],
    [0.053, 0.066, 0.044, 0.05, 0.051],
    [0.064, 0.072, 0.043, 0.047, 0.055],
    [0.088, 0.108, 0.026, 0.026, 0.062],
];

/// Sample sizes and empirical power in grid order, columns [identity, log, log existing, loglog, logit, arcsin].
pub const POWER_T2: [([u64; 6], [f64; 6]); 12] = [
    ([99, 52, 71, 75, 59, 77], [0.861, 0.739, 0.786, 0.761, 0.769, 0.794]),
    ([155, 125, 144, 166, 151, 153], [0.789, 0.762, 0.82, 0.803, 0.792, 0.791]),
    ([99, 87, 106, 142, 134, 115], [0.755, 0.719, 0.791, 0.857, 0.845, 0.795]),
    ([111, 58, 80, 84, 66, 86], [0.832, 0.716, 0.814, 0.784, 0.739, 0.785]),
    ([170, 136, 158, 181, 165, 167], [0.801, 0.76, 0.808, 0.815, 0.798, 0.799]),
    ([107, 94, 115, 153, 144, 125], [0.777, 0.755, 0.818, 0.85, 0.838, 0.809]),
    ([129, 67, 98, 97, 77, 100], [0.832, 0.713, 0.829, 0.782, 0.74, 0.785]),
    ([171, 137, 161, 183, 166, 169], [0.802, 0.761, 0.813, 0.818, 0.798, 0.801]),
    ([102, 90, 110, 146, 137, 119], [0.779, 0.762, 0.822, 0.851, 0.839, 0.811]),
    ([145, 76, 111, 109, 87, 113], [0.861, 0.747, 0.856, 0.812, 0.773, 0.817]),
    ([188, 151, 178, 201, 183, 185], [0.841, 0.801, 0.852, 0.855, 0.839, 0.839]),
    ([111, 97, 119, 158, 149, 129], [0.804, 0.781, 0.843, 0.874, 0.864, 0.835]),
];

/// Sample sizes and empirical power in grid order, columns [identity, log, log existing, loglog, logit, arcsin].
pub const POWER_T3: [([u64; 6], [f64; 6]); 3] = [
    ([45, 33, 50, 66, 57, 51], [0.901, 0.839, 0.915, 0.935, 0.938, 0.899]),
    ([73, 53, 68, 83, 73, 73], [0.805, 0.768, 0.83, 0.872, 0.805, 0.805]),
    ([35, 18, 32, 38, 29, 32], [0.913, 0.761, 0.945, 0.929, 0.868, 0.893]),
];

/// Sample sizes and empirical power in grid order, columns [identity, log, log existing, loglog, logit, arcsin].
pub const POWER_S2: [([u64; 6], [f64; 6]); 24] = [
    ([99, 52, 71, 75, 59, 77], [0.861, 0.739, 0.786, 0.761, 0.769, 0.794]),
    ([73, 38, 54, 55, 43, 56], [0.817, 0.66, 0.78, 0.798, 0.784, 0.815]),
    ([138, 72, 106, 104, 82, 107], [0.939, 0.802, 0.921, 0.907, 0.861, 0.884]),
    ([106, 55, 86, 80, 63, 82], [0.921, 0.798, 0.901, 0.9, 0.836, 0.916]),
    ([155, 125, 144, 166, 151, 153], [0.789, 0.762, 0.82, 0.803, 0.792, 0.791]),
    ([113, 91, 108, 121, 110, 112], [0.826, 0.735, 0.806, 0.818, 0.804, 0.802]),
    ([215, 172, 208, 229, 209, 212], [0.89, 0.874, 0.906, 0.907, 0.893, 0.904]),
    ([165, 132, 164, 176, 160, 163], [0.894, 0.871, 0.908, 0.924, 0.911, 0.895]),
    ([99, 87, 106, 142, 134, 115], [0.755, 0.719, 0.791, 0.857, 0.845, 0.795]),
    ([73, 64, 80, 103, 97, 84], [0.805, 0.803, 0.837, 0.832, 0.851, 0.773]),
    ([138, 121, 155, 196, 185, 160], [0.893, 0.836, 0.931, 0.949, 0.938, 0.898]),
    ([106, 93, 123, 150, 142, 123], [0.899, 0.845, 0.906, 0.934, 0.929, 0.906]),
    ([111, 58, 80, 84, 66, 86], [0.832, 0.716, 0.814, 0.784, 0.739, 0.785]),
    ([81, 43, 61, 61, 48, 63], [0.829, 0.718, 0.812, 0.781, 0.736, 0.784]),
    ([154, 80, 120, 116, 92, 120], [0.929, 0.814, 0.917, 0.885, 0.843, 0.89]),
    ([118, 62, 97, 89, 70, 92], [0.926, 0.816, 0.918, 0.884, 0.84, 0.888]),
    ([170, 136, 158, 181, 165, 167], [0.801, 0.759, 0.808, 0.815, 0.798, 0.799]),
    ([124, 100, 118, 132, 120, 122], [0.801, 0.763, 0.809, 0.814, 0.797, 0.799]),
    ([235, 189, 228, 251, 228, 232], [0.9, 0.862, 0.91, 0.914, 0.897, 0.899]),
    ([180, 145, 180, 193, 175, 178], [0.9, 0.863, 0.912, 0.913, 0.897, 0.899]),
    ([107, 94, 115, 153, 144, 125], [0.777, 0.755, 0.818, 0.85, 0.838, 0.809]),
    ([78, 69, 87, 112, 105, 91], [0.779, 0.761, 0.823, 0.85, 0.838, 0.809]),
    ([149, 130, 168, 212, 200, 173], [0.878, 0.853, 0.918, 0.939, 0.931, 0.906]),
    ([114, 100, 134, 163, 153, 132], [0.879, 0.858, 0.921, 0.938, 0.929, 0.905]),
];

/// Sample sizes and empirical power in grid order, columns [identity, log, log existing, loglog, logit, arcsin].
pub const POWER_S3: [([u64; 6], [f64; 6]); 24] = [
    ([99, 52, 71, 75, 59, 77], [0.861, 0.739, 0.786, 0.761, 0.769, 0.794]),
    ([73, 38, 54, 55, 43, 56], [0.817, 0.66, 0.78, 0.798, 0.784, 0.815]),
    ([138, 72, 106, 104, 82, 107], [0.939, 0.802, 0.921, 0.907, 0.861, 0.884]),
    ([106, 55, 86, 80, 63, 82], [0.921, 0.798, 0.901, 0.9, 0.836, 0.916]),
    ([155, 125, 144, 166, 151, 153], [0.789, 0.762, 0.82, 0.803, 0.792, 0.791]),
    ([113, 91, 108, 121, 110, 112], [0.826, 0.735, 0.806, 0.818, 0.804, 0.802]),
    ([215, 172, 208, 229, 209, 212], [0.89, 0.874, 0.906, 0.907, 0.893, 0.904]),
    ([165, 132, 164, 176, 160, 163], [0.894, 0.871, 0.908, 0.924, 0.911, 0.895]),
    ([99, 87, 106, 142, 134, 115], [0.755, 0.719, 0.791, 0.857, 0.845, 0.795]),
    ([73, 64, 80, 103, 97, 84], [0.805, 0.803, 0.837, 0.832, 0.851, 0.773]),
    ([138, 121, 155, 196, 185, 160], [0.893, 0.836, 0.931, 0.949, 0.938, 0.898]),
    ([106, 93, 123, 150, 142, 123], [0.899, 0.845, 0.906, 0.934, 0.929, 0.906]),
    ([107, 56, 76, 80, 64, 83], [0.834, 0.717, 0.811, 0.782, 0.746, 0.788]),
    ([78, 41, 59, 59, 46, 61], [0.831, 0.721, 0.814, 0.782, 0.736, 0.79]),
    ([147, 77, 115, 111, 88, 115], [0.928, 0.815, 0.918, 0.885, 0.843, 0.89]),
    ([113, 59, 93, 85, 67, 88], [0.927, 0.814, 0.919, 0.883, 0.841, 0.888]),
    ([163, 131, 152, 175, 159, 161], [0.8, 0.76, 0.809, 0.817, 0.798, 0.799]),
    ([119, 96, 114, 127, 116, 118], [0.8, 0.762, 0.811, 0.814, 0.798, 0.8]),
    ([226, 182, 220, 242, 220, 223], [0.9, 0.862, 0.91, 0.913, 0.898, 0.899]),
    ([174, 140, 173, 186, 169, 171], [0.901, 0.864, 0.911, 0.913, 0.897, 0.899]),
    ([104, 91, 111, 148, 140, 121], [0.779, 0.757, 0.817, 0.85, 0.841, 0.809]),
    ([76, 67, 84, 108, 102, 88], [0.78, 0.765, 0.821, 0.85, 0.839, 0.809]),
    ([144, 126, 163, 205, 193, 167], [0.878, 0.855, 0.918, 0.939, 0.93, 0.906]),
    ([110, 97, 129, 157, 148, 128], [0.879, 0.86, 0.92, 0.938, 0.93, 0.906]),
];

/// Sample sizes and empirical power in grid order, columns [identity, log, log existing, loglog, logit, arcsin].
pub const POWER_S4: [([u64; 6], [f64; 6]); 24] = [
    ([99, 52, 71, 75, 59, 77], [0.861, 0.739, 0.786, 0.761, 0.769, 0.794]),
    ([73, 38, 54, 55, 43, 56], [0.817, 0.66, 0.78, 0.798, 0.784, 0.815]),
    ([138, 72, 106, 104, 82, 107], [0.939, 0.802, 0.921, 0.907, 0.861, 0.884]),
    ([106, 55, 86, 80, 63, 82], [0.921, 0.798, 0.901, 0.9, 0.836, 0.916]),
    ([155, 125, 144, 166, 151, 153], [0.789, 0.762, 0.82, 0.803, 0.792, 0.791]),
    ([113, 91, 108, 121, 110, 112], [0.826, 0.735, 0.806, 0.818, 0.804, 0.802]),
    ([215, 172, 208, 229, 209, 212], [0.89, 0.874, 0.906, 0.907, 0.893, 0.904]),
    ([165, 132, 164, 176, 160, 163], [0.894, 0.871, 0.908, 0.924, 0.911, 0.895]),
    ([99, 87, 106, 142, 134, 115], [0.755, 0.719, 0.791, 0.857, 0.845, 0.795]),
    ([73, 64, 80, 103, 97, 84], [0.805, 0.803, 0.837, 0.832, 0.851, 0.773]),
    ([138, 121, 155, 196, 185, 160], [0.893, 0.836, 0.931, 0.949, 0.938, 0.898]),
    ([106, 93, 123, 150, 142, 123], [0.899, 0.845, 0.906, 0.934, 0.929, 0.906]),
    ([117, 61, 84, 88, 70, 91], [0.833, 0.715, 0.813, 0.783, 0.742, 0.787]),
    ([85, 45, 64, 64, 51, 66], [0.829, 0.716, 0.812, 0.78, 0.739, 0.783]),
    ([162, 84, 126, 122, 96, 126], [0.929, 0.813, 0.917, 0.885, 0.841, 0.889]),
    ([124, 65, 102, 94, 74, 96], [0.926, 0.816, 0.918, 0.885, 0.841, 0.886]),
    ([178, 143, 166, 190, 173, 176], [0.8, 0.761, 0.808, 0.815, 0.797, 0.799]),
    ([130, 104, 124, 139, 126, 128], [0.801, 0.761, 0.809, 0.815, 0.797, 0.799]),
    ([246, 198, 240, 263, 240, 243], [0.9, 0.861, 0.911, 0.912, 0.898, 0.899]),
    ([189, 152, 189, 202, 184, 187], [0.9, 0.863, 0.912, 0.912, 0.897, 0.899]),
    ([113, 99, 121, 161, 151, 131], [0.779, 0.757, 0.819, 0.851, 0.838, 0.809]),
    ([82, 72, 91, 117, 110, 95], [0.78, 0.76, 0.821, 0.849, 0.837, 0.808]),
    ([156, 137, 176, 222, 209, 181], [0.878, 0.855, 0.917, 0.939, 0.93, 0.905]),
    ([120, 105, 140, 171, 161, 139], [0.88, 0.857, 0.92, 0.938, 0.93, 0.906]),
];

/// Sample sizes and empirical power in grid order, columns [identity, log, log existing, loglog, logit, arcsin].
pub const POWER_S5: [([u64; 6], [f64; 6]); 24] = [
    ([129, 67, 98, 97, 77, 100], [0.832, 0.713, 0.829, 0.782, 0.74, 0.785]),
    ([94, 49, 75, 71, 56, 73], [0.829, 0.713, 0.827, 0.78, 0.738, 0.783]),
    ([178, 93, 149, 134, 106, 138], [0.928, 0.814, 0.93, 0.884, 0.84, 0.887]),
    ([137, 71, 121, 103, 81, 106], [0.926, 0.813, 0.93, 0.882, 0.839, 0.885]),
    ([171, 137, 161, 183, 166, 169], [0.802, 0.761, 0.813, 0.818, 0.798, 0.801]),
    ([125, 100, 121, 133, 121, 123], [0.802, 0.762, 0.815, 0.815, 0.798, 0.8]),
    ([237, 190, 233, 253, 230, 233], [0.901, 0.863, 0.914, 0.915, 0.898, 0.899]),
    ([182, 146, 184, 194, 177, 179], [0.902, 0.865, 0.916, 0.914, 0.899, 0.9]),
    ([102, 90, 110, 146, 137, 119], [0.779, 0.762, 0.821, 0.851, 0.839, 0.811]),
    ([75, 66, 83, 106, 100, 87], [0.787, 0.769, 0.822, 0.849, 0.839, 0.814]),
    ([142, 124, 161, 202, 190, 164], [0.88, 0.855, 0.919, 0.94, 0.931, 0.905]),
    ([109, 95, 128, 155, 146, 126], [0.882, 0.856, 0.922, 0.939, 0.93, 0.906]),
    ([145, 76, 111, 109, 87, 113], [0.861, 0.747, 0.856, 0.812, 0.773, 0.817]),
    ([106, 55, 86, 80, 63, 82], [0.854, 0.739, 0.854, 0.807, 0.764, 0.809]),
    ([201, 105, 170, 151, 120, 156], [0.946, 0.841, 0.948, 0.906, 0.867, 0.91]),
    ([154, 81, 139, 116, 92, 120], [0.941, 0.839, 0.947, 0.902, 0.863, 0.906]),
    ([188, 151, 178, 201, 183, 185], [0.841, 0.801, 0.852, 0.855, 0.839, 0.839]),
    ([137, 110, 133, 146, 133, 135], [0.835, 0.796, 0.847, 0.849, 0.831, 0.833]),
    ([260, 209, 257, 278, 253, 256], [0.928, 0.894, 0.938, 0.939, 0.926, 0.927]),
    ([199, 160, 203, 213, 194, 197], [0.925, 0.891, 0.937, 0.936, 0.923, 0.924]),
    ([111, 97, 119, 158, 149, 129], [0.804, 0.781, 0.843, 0.874, 0.864, 0.835]),
    ([81, 71, 90, 115, 109, 94], [0.804, 0.782, 0.843, 0.869, 0.86, 0.832]),
    ([153, 134, 175, 218, 206, 178], [0.897, 0.875, 0.935, 0.952, 0.945, 0.923]),
    ([118, 103, 139, 168, 158, 137], [0.898, 0.876, 0.936, 0.951, 0.943, 0.922]),
];

/// Sample sizes and empirical power in grid order, columns [identity, log, log existing, loglog, logit, arcsin].
pub const POWER_S6: [([u64; 6], [f64; 6]); 24] = [
    ([129, 67, 98, 97, 77, 100], [0.832, 0.713, 0.829, 0.782, 0.74, 0.785]),
    ([94, 49, 75, 71, 56, 73], [0.829, 0.713, 0.827, 0.78, 0.738, 0.783]),
    ([178, 93, 149, 134, 106, 138], [0.928, 0.814, 0.93, 0.884, 0.84, 0.887]),
    ([137, 71, 121, 103, 81, 106], [0.926, 0.813, 0.93, 0.882, 0.839, 0.885]),
    ([171, 137, 161, 183, 166, 169], [0.802, 0.761, 0.813, 0.818, 0.798, 0.801]),
    ([125, 100, 121, 133, 121, 123], [0.802, 0.762, 0.815, 0.815, 0.798, 0.8]),
    ([237, 190, 233, 253, 230, 233], [0.901, 0.863, 0.914, 0.915, 0.898, 0.899]),
    ([182, 146, 184, 194, 177, 179], [0.902, 0.865, 0.916, 0.914, 0.899, 0.9]),
    ([102, 90, 110, 146, 137, 119], [0.779, 0.762, 0.822, 0.851, 0.839, 0.811]),
    ([75, 66, 83, 106, 100, 87], [0.787, 0.769, 0.822, 0.849, 0.839, 0.814]),
    ([142, 124, 161, 202, 190, 164], [0.88, 0.855, 0.919, 0.94, 0.931, 0.905]),
    ([109, 95, 128, 155, 146, 126], [0.882, 0.856, 0.922, 0.939, 0.93, 0.906]),
    ([139, 73, 106, 105, 83, 108], [0.848, 0.735, 0.845, 0.802, 0.759, 0.804]),
    ([101, 53, 82, 76, 60, 79], [0.842, 0.731, 0.843, 0.794, 0.752, 0.799]),
    ([192, 100, 162, 145, 114, 149], [0.938, 0.828, 0.941, 0.898, 0.854, 0.9]),
    ([148, 77, 132, 111, 88, 115], [0.936, 0.827, 0.94, 0.893, 0.853, 0.898]),
    ([181, 145, 171, 193, 176, 178], [0.825, 0.784, 0.835, 0.839, 0.822, 0.823]),
    ([132, 106, 128, 141, 128, 130], [0.822, 0.782, 0.833, 0.836, 0.817, 0.819]),
    ([250, 201, 247, 267, 243, 247], [0.917, 0.881, 0.928, 0.929, 0.914, 0.916]),
    ([192, 154, 195, 205, 187, 189], [0.915, 0.88, 0.928, 0.926, 0.913, 0.914]),
    ([107, 94, 115, 153, 144, 124], [0.793, 0.772, 0.833, 0.865, 0.854, 0.822]),
    ([78, 69, 87, 111, 105, 91], [0.792, 0.773, 0.835, 0.86, 0.851, 0.823]),
    ([148, 130, 169, 211, 199, 172], [0.889, 0.867, 0.929, 0.947, 0.94, 0.916]),
    ([114, 100, 134, 162, 153, 132], [0.89, 0.869, 0.93, 0.945, 0.938, 0.915]),
];

/// Sample sizes and empirical power in grid order, columns [identity, log, log existing, loglog, logit, arcsin].
pub const POWER_S7: [([u64; 6], [f64; 6]); 24] = [
    ([129, 67, 98, 97, 77, 100], [0.832, 0.713, 0.829, 0.782, 0.74, 0.785]),
    ([94, 49, 75, 71, 56, 73], [0.829, 0.713, 0.827, 0.78, 0.738, 0.783]),
    ([178, 93, 149, 134, 106, 138], [0.928, 0.814, 0.93, 0.884, 0.84, 0.887]),
    ([137, 71, 121, 103, 81, 106], [0.926, 0.813, 0.93, 0.882, 0.839, 0.885]),
    ([171, 137, 161, 183, 166, 169], [0.802, 0.761, 0.813, 0.818, 0.798, 0.801]),
    ([125, 100, 121, 133, 121, 123], [0.802, 0.762, 0.815, 0.815, 0.798, 0.8]),
    ([237, 190, 233, 253, 230, 233], [0.901, 0.863, 0.914, 0.915, 0.898, 0.899]),
    ([182, 146, 184, 194, 177, 179], [0.902, 0.865, 0.916, 0.914, 0.899, 0.9]),
    ([102, 90, 110, 146, 137, 119], [0.779, 0.762, 0.822, 0.851, 0.839, 0.811]),
    ([75, 66, 83, 106, 100, 87], [0.786, 0.769, 0.822, 0.849, 0.839, 0.814]),
    ([142, 124, 161, 202, 190, 164], [0.88, 0.855, 0.919, 0.94, 0.931, 0.905]),
    ([109, 95, 128, 155, 146, 126], [0.882, 0.856, 0.922, 0.939, 0.93, 0.906]),
    ([153, 80, 117, 115, 91, 119], [0.879, 0.765, 0.871, 0.831, 0.789, 0.836]),
    ([111, 58, 90, 84, 66, 87], [0.868, 0.756, 0.866, 0.822, 0.779, 0.827]),
    ([211, 110, 178, 159, 126, 164], [0.955, 0.856, 0.956, 0.919, 0.882, 0.923]),
    ([162, 85, 145, 122, 97, 126], [0.951, 0.853, 0.954, 0.913, 0.877, 0.917]),
    ([197, 159, 187, 211, 192, 195], [0.863, 0.825, 0.872, 0.877, 0.86, 0.862]),
    ([144, 116, 140, 154, 140, 142], [0.855, 0.818, 0.866, 0.868, 0.852, 0.854]),
    ([273, 219, 270, 292, 266, 269], [0.943, 0.911, 0.951, 0.952, 0.94, 0.941]),
    ([210, 168, 213, 224, 204, 207], [0.939, 0.906, 0.949, 0.948, 0.936, 0.937]),
    ([116, 102, 125, 165, 156, 135], [0.818, 0.797, 0.856, 0.886, 0.877, 0.849]),
    ([85, 74, 95, 121, 114, 98], [0.817, 0.793, 0.856, 0.882, 0.872, 0.842]),
    ([161, 141, 184, 229, 216, 187], [0.909, 0.888, 0.944, 0.96, 0.953, 0.934]),
    ([123, 108, 146, 176, 166, 143], [0.907, 0.886, 0.944, 0.957, 0.951, 0.93]),
];
