import tensorflow as tf

scale = 3
for i in range(10):
    x = i * scale
    y = x + 1
    tf.constant(y)
