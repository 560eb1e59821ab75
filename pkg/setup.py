from setuptools import find_packages, setup

setup(
    name="fourierpos",
    version="0.1.0",
    description="Fourier-positivity detectors (Poisson characteristic function and Bochner matrices) with randomized test corpora",
    packages=find_packages(exclude=["tests", "tests.*"]),
    zip_safe=False,
    python_requires=">=3.8",
    install_requires=[
        "torch",
        "numpy",
        "scipy",
        "omegaconf",
        "easydict",
        "tqdm",
    ],
    extras_require={"test": ["pytest"]},
    entry_points={"console_scripts": ["fourierpos=fourierpos.main:main"]},
    keywords=["fourier", "positivity", "bochner", "poisson summation"],
)
