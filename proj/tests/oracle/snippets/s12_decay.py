import tensorflow as tf

lr = 0.1
for epoch in range(4):
    lr = lr * 0.9
    tf.constant(lr)
