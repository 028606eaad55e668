from setuptools import setup, find_packages

setup(
    name="sausage-lab",
    version="0.1.0",
    description="Small-time coefficients of Wiener sausage volumes and weighted heat kernel norms",
    author="Sausage Lab Team",
    author_email="example@example.com",
    packages=find_packages(exclude=["tests", "examples", "examples.*"]),
    install_requires=[
        "numpy>=1.26.0",
        "scipy>=1.11.0",
        "mpmath>=1.3.0",
        "pandas>=2.0.3",
        "python-dotenv>=1.0.0",
        "tqdm>=4.65.0",
        "pydantic>=2.0.3"
    ],
    entry_points={
        'console_scripts': [
            'sausage-lab=src.main:main',
        ],
    },
    python_requires=">=3.9",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
